# -*- coding: utf-8 -*-
""" Avaluadors de G-teoria en forma tancada.

Cada avaluador retorna una GroupExpr canònica, avaluada en el model de cos demanat. Els que
provenen d'una inducció o d'un recobriment poden retornar també la traça de la derivació com
a llista de PasDerivacio.
"""
import dataclasses
import logging

from scipy import special

from base.reticle import ErrorToric
from cons import con, ventall
from gteoria import cos
from gteoria.cos import FieldModel, HipotesiViolada
from gteoria.grup import GroupExpr
from semigrup import quocient

CONVENCIONS = {
    "affine_surface_gtheory": "sigma^dual",
    "semigroup_ring_gtheory": "sigma",
    "monomial_surface_gtheory": "sigma",
}


class GrauNoSuportat(ErrorToric):
    def __init__(self, n: int) -> None:
        self.n = n
        super().__init__(f"La fórmula de Künneth només està demostrada per a n = 0, 1, 2 (s'ha demanat n = {n})")


@dataclasses.dataclass(frozen=True)
class PasDerivacio:
    pas: int
    afirmacio: str
    rao: str

    def to_dict(self) -> dict:
        return {"pas": self.pas, "afirmacio": self.afirmacio, "rao": self.rao}

    def __str__(self):
        return f"{self.pas}. {self.afirmacio} [{self.rao}]"


def _exigeix_grau(n: int) -> int:
    if int(n) != n or n < 0:
        raise ValueError(f"El grau {n} ha de ser un enter no negatiu")
    return int(n)


def _exigeix_alg_tancat(operacio: str, f: FieldModel) -> None:
    if not f.es_alg_tancat:
        raise HipotesiViolada(operacio, f)


def _superficie(n: int, torsio: int) -> GroupExpr:
    """``G_n(k) ⊕ Z/torsio`` en grau parell i ``G_n(k)`` en grau senar."""
    g = GroupExpr.gk(n)
    if n % 2 == 0:
        g = g + GroupExpr.ciclic(torsio)
    return g


def affine_surface_gtheory(c: con.Cone, n: int, f: FieldModel | None = None) -> GroupExpr:
    """G-teoria de ``X = Spec k[sigma^dual ∩ Z^2]`` per al con ple ``sigma = c``.

    Args:
        c: Con del ventall, fortament convex i ple a Z^2.
        n: Grau.
        f: Model del cos. Ha de ser algebraicament tancat de característica 0.
    Retorna:
        ``G_n(k) ⊕ Z/|delta|`` si ``n`` és parell, ``G_n(k)`` si és senar.
    Llança:
        HipotesiViolada amb qualsevol altre model de cos.
    """
    f = f or FieldModel.alg_closed_char0()
    _exigeix_alg_tancat("affine_surface_gtheory", f)
    n = _exigeix_grau(n)
    return _superficie(n, abs(con.delta(c)))


def semigroup_ring_gtheory(a: int, b: int, n: int, f: FieldModel | None = None) -> GroupExpr:
    """G-teoria de ``Spec k[sigma ∩ Z^2]`` per a ``sigma = cone(e_1, a e_1 + b e_2)``.

    La torsió es pren de l'enumeració de la base de ``R/xR``, no de la fórmula tancada.
    """
    f = f or FieldModel.alg_closed_char0()
    _exigeix_alg_tancat("semigroup_ring_gtheory", f)
    n = _exigeix_grau(n)
    return _superficie(n, quocient.boundary_image(a, b))


def monomial_surface_gtheory(m: int, n: int, f: FieldModel | None = None) -> GroupExpr:
    """G-teoria de ``Spec k[x, xy, ..., xy^m]``."""
    if m < 1:
        raise ValueError("m ha de ser un enter positiu")
    return semigroup_ring_gtheory(1, m, n, f)


def _termes_torus(N: int, n: int) -> list[tuple[int, int]]:
    """Parelles ``(n - j, C(N, j))`` amb ``n - j >= 0``."""
    return [
        (n - j, int(special.comb(N, j, exact=True)))
        for j in range(min(N, n) + 1)
    ]


def torus_chart_gtheory(r: int, N: int, n: int, f: FieldModel | None = None) -> GroupExpr:
    """``G_n(A^r × G_m^N) = ⊕_j G_(n-j)(k)^C(N, j)``, iterant el teorema fonamental."""
    f = f or FieldModel.symbolic()
    if r < 0 or N < 0:
        raise ValueError("r i N han de ser no negatius")
    n = _exigeix_grau(n)
    g = GroupExpr.zero()
    for grau, c in _termes_torus(N, n):
        g = g + GroupExpr.gk(grau, c)
    return cos.evaluate(g, f)


def _wps_induccio(weights, n: int) -> tuple[GroupExpr, list[PasDerivacio]]:
    pesos = ventall._valida_pesos(weights)
    n = _exigeix_grau(n)

    def nom(ps):
        return "P(" + ",".join(str(p) for p in ps) + ")"

    g = GroupExpr.gk(n, 2)
    traca = [
        PasDerivacio(
            1,
            f"G_{n}({nom(pesos[:2])}) = {g}",
            "una recta projectiva ponderada és isomorfa a P^1; fórmula del fibrat projectiu",
        )
    ]
    for d in range(2, len(pesos)):
        g = g + GroupExpr.gk(n)
        traca.append(
            PasDerivacio(
                d,
                f"G_{n}({nom(pesos[:d + 1])}) = {g}",
                f"Z = V+(x_{d}) = {nom(pesos[:d])}, U = D+(x_{d}) = A^{d}, "
                f"per tant G~_{n}(U) = 0 i G_{n}(Z) = G~_{n}(X)",
            )
        )
    return g, traca


def wps_gtheory(weights, n: int, f: FieldModel | None = None) -> GroupExpr:
    """``G_n(P(a_0, ..., a_d)) = G_n(k)^(d+1)`` sobre qualsevol cos."""
    g, _ = _wps_induccio(weights, n)
    return cos.evaluate(g, f or FieldModel.symbolic())


def wps_derivation(weights, n: int) -> list[PasDerivacio]:
    return _wps_induccio(weights, n)[1]


def _resolucio(d: int, n: int) -> tuple[GroupExpr, list[PasDerivacio]]:
    n = _exigeix_grau(n)
    f = ventall.resolution_fan(d)
    sigma1, sigma2 = f.con(0), f.con(1)
    for s in (sigma1, sigma2):
        if not con.is_smooth_cone(s):
            raise ErrorToric(f"El con {s} de la resolució no és llis")

    reduit_tau = GroupExpr.zero()
    for grau, c in _termes_torus(1, n + 1)[1:]:
        reduit_tau = reduit_tau + GroupExpr.gk(grau, c)
    g = GroupExpr.gk(n) + reduit_tau

    traca = [
        PasDerivacio(1, f"U_sigma1 = A^2 per a sigma1 = {sigma1}: G~_{n}(U_sigma1) = 0", "con llis"),
        PasDerivacio(2, f"U_sigma2 = A^2 per a sigma2 = {sigma2}: G~_{n}(U_sigma2) = 0", "con llis"),
        PasDerivacio(
            3,
            f"U_tau = Spec k[x, y, y^-1]: G_{n + 1}(U_tau) = {torus_chart_gtheory(1, 1, n + 1)}",
            "teorema fonamental de la G-teoria",
        ),
        PasDerivacio(
            4,
            f"G~_{n}(X~) = G~_{n + 1}(U_tau) = {reduit_tau}",
            "recobriment per U_sigma1 i U_sigma2 amb intersecció U_tau",
        ),
        PasDerivacio(5, f"G_{n}(X~) = G_{n}(k) ⊕ G~_{n}(X~) = {g}", "punt racional llis"),
    ]
    return g, traca


def resolution_gtheory(d: int, n: int, f: FieldModel | None = None) -> GroupExpr:
    """G-teoria de la resolució de ``Spec k[sigma^dual ∩ Z^2]``, ``sigma = cone(e_2, d e_1 - e_2)``."""
    g, _ = _resolucio(d, n)
    return cos.evaluate(g, f or FieldModel.symbolic())


def resolution_derivation(d: int, n: int) -> list[PasDerivacio]:
    return _resolucio(d, n)[1]


def kunneth_product(gx: list[GroupExpr], gy: list[GroupExpr], n: int, f: FieldModel | None = None) -> GroupExpr:
    """``G_n(X × Y) = ⊕_(i=0..n) G_i(X) ⊗ G_(n-i)(Y)`` per a ``n <= 2``."""
    f = f or FieldModel.symbolic()
    n = _exigeix_grau(n)
    if n > 2:
        raise GrauNoSuportat(n)
    if len(gx) <= n or len(gy) <= n:
        raise ValueError(f"Calen els grups de grau 0..{n} de tots dos factors")

    g = GroupExpr.zero()
    for i in range(n + 1):
        g = g + cos.tensor(gx[i], gy[n - i], f)
    logging.info("Künneth en grau %d: %s", n, g)
    return cos.evaluate(g, f)


def wps_product_gtheory(wx, wy, n: int, f: FieldModel | None = None) -> GroupExpr:
    """``G_n`` del producte de dos espais projectius ponderats."""
    f = f or FieldModel.symbolic()
    n = _exigeix_grau(n)
    if n > 2:
        raise GrauNoSuportat(n)
    gx = [wps_gtheory(wx, i, f) for i in range(n + 1)]
    gy = [wps_gtheory(wy, i, f) for i in range(n + 1)]
    return kunneth_product(gx, gy, n, f)


def _exigeix_complet_simplicial(f: ventall.Fan) -> None:
    if not f.simplicial:
        raise ventall.VentallInvalid(f"{f} no és simplicial")
    if not f.complete:
        raise ventall.VentallInvalid(f"{f} no és complet")


def betti_even(f: ventall.Fan) -> list[int]:
    """Nombres de Betti parells ``b_2k = sum_(i=k..n) (-1)^(i-k) C(i, k) |Sigma(n-i)|``."""
    _exigeix_complet_simplicial(f)
    comptes = f.census()
    n = f.rank
    return [
        sum(
            (-1) ** (i - k) * int(special.comb(i, k, exact=True)) * comptes[n - i]
            for i in range(k, n + 1)
        )
        for k in range(n + 1)
    ]


def g0_rational_dim(f: ventall.Fan) -> int:
    """Dimensió de ``G_0(X) ⊗ Q``: la suma dels Betti parells."""
    return sum(betti_even(f))
