# -*- coding: utf-8 -*-
""" Grup de Chow dels cicles de codimensió 2 de varietats tòriques afins.

Per a un con llis ``sigma`` de dimensió ``r`` a Z^n, ``U_sigma`` és isomorf a ``A^r × G_m^N``
amb ``N = n - r``, i ``A^2(U_sigma) = A^2(G_m^N)``. El càlcul desplega la inducció sobre ``N``
amb la fórmula de Künneth i deixa cada pas a la traça.
"""
import dataclasses
import enum

from base import reticle
from base.reticle import ErrorToric
from cons import con
from gteoria.grup import GroupExpr
from gteoria.teoremes import PasDerivacio


class ConNoLlis(ErrorToric):
    def __init__(self, c, diagonal: list[int]) -> None:
        self.diagonal = diagonal
        super().__init__(f"El con {c} no és llis: diagonal de Smith {diagonal}")


@dataclasses.dataclass(frozen=True)
class ResultatA2:
    group: GroupExpr
    traca: tuple[PasDerivacio, ...]
    r: int
    n: int

    @property
    def N(self) -> int:
        return self.n - self.r


def _induccio_torus(N: int, primer_pas: int) -> list[PasDerivacio]:
    if N == 0:
        return [PasDerivacio(primer_pas, "A^2(G_m^0) = A^2(punt) = 0", "dimensió 0")]
    if N == 1:
        return [PasDerivacio(primer_pas, "A^2(G_m) = 0", "G_m té dimensió 1")]

    passos = [PasDerivacio(primer_pas, "A^2(G_m) = 0", "G_m té dimensió 1")]
    for M in range(2, N + 1):
        for i in range(M - 1):
            sumand = f"A_{i}(G_m) ⊗ A_{M - 2 - i}(G_m^{M - 1})"
            if i == 0:
                rao = "A_0(G_m) = Cl(G_m) = 0 perquè k[x, x^-1] és factorial"
            elif i == 1:
                rao = f"A_{M - 3}(G_m^{M - 1}) = A^2(G_m^{M - 1}) = 0 per hipòtesi d'inducció"
            else:
                rao = f"A_{i}(G_m) = 0 perquè G_m té dimensió 1"
            passos.append(PasDerivacio(primer_pas + len(passos), f"{sumand} = 0", rao))
        passos.append(
            PasDerivacio(
                primer_pas + len(passos),
                f"A^2(G_m^{M}) = 0",
                "Künneth per a esquemes lineals: tots els sumands s'anul·len",
            )
        )
    return passos


def a2_smooth_affine(c: con.Cone) -> ResultatA2:
    """``A^2`` de la varietat tòrica afí llisa associada a ``c``.

    Llança:
        ConNoLlis amb la diagonal de Smith que falla.
    """
    if not c.es_simplicial():
        raise con.ConNoSimplicial(c)
    if not con.is_smooth_cone(c):
        raise ConNoLlis(c, reticle.smith_normal_form(c.matriu).diagonal)

    a, r = con.smooth_standard_form(c)
    n = c.rank
    N = n - r
    traca = [
        PasDerivacio(
            1,
            f"A = {[list(fila) for fila in a]} compleix A u_i = e_i; U_sigma = A^{r} × G_m^{N}",
            "els generadors d'un con llis s'estenen a una base de Z^n",
        ),
        PasDerivacio(
            2,
            f"A^2(U_sigma) = A_{n - 2}(U_sigma) = A_{N - 2}(G_m^{N}) = A^2(G_m^{N})",
            "invariància per homotopia dels grups de Chow",
        ),
    ]
    traca.extend(_induccio_torus(N, primer_pas=3))
    return ResultatA2(group=GroupExpr.zero(), traca=tuple(traca), r=r, n=n)


class Estat(enum.Enum):
    PROVED = "Proved"
    TRIVIAL = "Trivial"
    OUT_OF_SCOPE = "OutOfScope"


@dataclasses.dataclass(frozen=True)
class ConjectureReport:
    cone: con.Cone
    delta_abs: int
    a2_order: int | None
    divides: bool | None
    status: Estat
    justificacio: str

    def to_dict(self) -> dict:
        return {
            "cone": str(self.cone),
            "delta_abs": self.delta_abs,
            "a2_order": "Unknown" if self.a2_order is None else self.a2_order,
            "divides": "Unknown" if self.divides is None else self.divides,
            "status": self.status.value,
            "justificacio": self.justificacio,
        }

    def __str__(self):
        ordre = "Unknown" if self.a2_order is None else self.a2_order
        divideix = "Unknown" if self.divides is None else self.divides
        return (
            f"{self.status.value}: ordre de A^2 {ordre}, |delta| = {self.delta_abs}, "
            f"divideix {divideix} ({self.justificacio})"
        )


def _informe(c, delta_abs, a2_order, status, justificacio) -> ConjectureReport:
    divideix = None if a2_order is None else delta_abs % a2_order == 0
    return ConjectureReport(c, delta_abs, a2_order, divideix, status, justificacio)


def conjecture_check(c: con.Cone) -> ConjectureReport:
    """Comprova si l'ordre de ``A^2(U_sigma)`` divideix ``|delta|`` en els casos demostrats.

    Mai no afirma un ordre fora d'aquests casos: els cons simplicials no llisos de rang
    superior es marquen OUT_OF_SCOPE.
    """
    if not c.es_simplicial():
        raise con.ConNoSimplicial(c)

    if not c.rays:
        return _informe(c, 1, 1, Estat.TRIVIAL, "con zero: U_sigma = G_m^n")

    delta_abs = con.index_con(c)
    if con.is_smooth_cone(c):
        return _informe(c, delta_abs, 1, Estat.PROVED, "con llis: A^2(U_sigma) = 0")

    if c.rank == 2 and len(c.rays) == 2:
        return _informe(
            c,
            delta_abs,
            1,
            Estat.TRIVIAL,
            "superfície afí: A^2 = A_0 està generat pel punt fix, que és racionalment "
            "equivalent a 0 sobre una corba de la vora isomorfa a A^1",
        )

    return _informe(c, delta_abs, None, Estat.OUT_OF_SCOPE, "con simplicial no llis de rang >= 3")
