# -*- coding: utf-8 -*-
""" Base de ``R/xR`` com a ``k[v]``-mòdul, imatge de la vora i la identitat de la suma de parts
enteres.

Els punts ``p`` del con amb ``p - e_1`` fora del con són els monomis que no són a ``xR``. La
translació per ``v = (a, b)`` els deixa dins el mateix conjunt i cada òrbita aporta un generador
del ``k[v]``-mòdul; el nombre d'òrbites és la classe ``[R/xR]`` a ``G_0((R/xR)_red) = Z``.
"""
import dataclasses
import logging

from semigrup import generadors
from semigrup.punt import Semigrup, valida_parametres


@dataclasses.dataclass(frozen=True)
class SemigroupBasisReport:
    a: int
    b: int
    generators: tuple[tuple[int, int], ...]
    quotient_basis: tuple[tuple[int, int], ...]
    rank: int
    estable: bool

    @property
    def consistent(self) -> bool:
        return self.rank == self.b

    def to_dict(self) -> dict:
        return {
            "a": self.a,
            "b": self.b,
            "generators": [list(p) for p in self.generators],
            "quotient_basis": [list(p) for p in self.quotient_basis],
            "rank": self.rank,
            "consistent": self.consistent,
            "stable": self.estable,
        }


class QuotientBasis:
    """Enumerador de les òrbites de ``{p : p ∈ sigma, p - e_1 ∉ sigma}`` sota ``+v``.

    La caixa és ``y <= FACTOR_ALCADA * b * factor``; l'amplada se'n dedueix a partir de la
    recta ``a y = b x``. Es compara el resultat amb el de la caixa doble.
    """

    FACTOR_ALCADA = 2

    def __init__(self, a: int, b: int):
        self.__semigrup = Semigrup(a, b)

    def _caixa(self, factor: int) -> tuple[int, int]:
        s = self.__semigrup
        alcada = self.FACTOR_ALCADA * s.b * factor
        amplada = (s.a * alcada + s.b - 1) // s.b + 1
        return amplada, alcada

    def representants(self, factor: int = 1) -> list[tuple[int, int]]:
        """Un representant per òrbita: el punt de menor ``y`` (i després menor ``x``)."""
        s = self.__semigrup
        amplada, alcada = self._caixa(factor)
        representants = set()
        for x in range(amplada + 1):
            for y in range(alcada + 1):
                if not s.surt_per_e1(x, y):
                    continue
                px, py = x, y
                while s.surt_per_e1(px - s.a, py - s.b):
                    px, py = px - s.a, py - s.b
                representants.add((px, py))
        return sorted(representants, key=lambda p: (p[1], p[0]))

    def calcula(self) -> SemigroupBasisReport:
        s = self.__semigrup
        base = self.representants()
        estable = base == self.representants(factor=2)
        if not estable:
            logging.warning("La base de R/xR per a %s canvia en doblar la caixa", s)

        informe = SemigroupBasisReport(
            a=s.a,
            b=s.b,
            generators=tuple(generadors.hilbert_generators_2d(s.a, s.b)),
            quotient_basis=tuple(base),
            rank=len(base),
            estable=estable,
        )
        if not informe.consistent:
            logging.error(
                "El rang de R/xR per a %s és %d i no coincideix amb b = %d", s, informe.rank, s.b
            )
        return informe


def quotient_basis(a: int, b: int) -> SemigroupBasisReport:
    return QuotientBasis(a, b).calcula()


def floor_sum_terms(a: int, b: int) -> list[int]:
    """Sumands ``1, [b/a], [2b/a] - [b/a], ..., b - [(a-1)b/a] - 1`` de la identitat telescòpica."""
    a, b = valida_parametres(a, b)
    if a == 1:
        return [1, b - 1]
    termes = [1, b // a]
    for i in range(2, a):
        termes.append(i * b // a - (i - 1) * b // a)
    termes.append(b - (a - 1) * b // a - 1)
    return termes


def floor_sum_identity(a: int, b: int) -> int:
    return sum(floor_sum_terms(a, b))


def boundary_image(a: int, b: int) -> int:
    """Imatge de ``[R/xR]`` per l'aplicació de vora: el rang de la base del quocient."""
    return quotient_basis(a, b).rank


def nilradical_relation(m: int, p: int) -> tuple[tuple[int, int], bool]:
    """Exponent de ``(x y^p)^m = x^(m-p) v^p`` a ``R = k[x, xy, ..., xy^m]`` i si és a ``xR``.

    Retorna:
        La parella ``((m, p m), a_xR)``. ``a_xR`` és cert si ``x^(m-1) y^(p m)`` és a ``R``, cosa
        que passa exactament quan ``p < m``; llavors ``x y^p`` és nilpotent a ``R/xR``. Per a
        ``p = m`` el monomi és ``v^m``, que no ho és.
    """
    if m < 1 or not 0 <= p <= m:
        raise ValueError("Cal m >= 1 i 0 <= p <= m")
    s = Semigrup(1, m)
    exponent = ((m - p) + p * s.v[0], p * s.v[1])
    a_xr = s.conte(exponent[0] - 1, exponent[1])
    logging.debug("(xy^%d)^%d = x^%s y^%s, a xR: %s", p, m, *exponent, a_xr)
    return exponent, a_xr
