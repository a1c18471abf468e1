# -*- coding: utf-8 -*-
""" Forma normal d'un con de superfície sota GL(2, Z).

Tot con ple de Z^2 és equivalent a ``cone(e_1, a e_1 + b e_2)`` amb ``0 <= a < b`` coprimers:
es porta un generador a ``e_1`` amb l'algorisme d'Euclides estès, es reflecteix si cal perquè
``b > 0`` i s'aplica un cisallament que deixa ``0 <= a < b``.
"""
import dataclasses
import enum

import numpy as np

from base import reticle
from cons import con


class Tipus(enum.Enum):
    LLIS = 0
    SINGULAR = 1


@dataclasses.dataclass(frozen=True, eq=False)
class SurfaceNormalForm:
    tipus: Tipus
    a: int
    b: int
    transform: reticle.IntMat
    ordre: tuple[int, int]

    @property
    def es_llis(self) -> bool:
        return self.tipus is Tipus.LLIS

    def con_canonic(self) -> con.Cone:
        return con.Cone(2, [(1, 0), (self.a, self.b)])

    def __str__(self):
        if self.es_llis:
            return "Smooth"
        return f"Singular({self.a},{self.b})"


def _forma_ordenada(c: con.Cone, primer: int) -> SurfaceNormalForm:
    u1 = c.rays[primer]
    u2 = c.rays[1 - primer]

    # u1 -> e_1
    _, s, t = reticle.gcd_ext(u1[0], u1[1])
    m1 = np.array([[s, t], [-u1[1], u1[0]]], dtype=object)
    p, q = m1 @ np.array(u2, dtype=object)

    reflexio = np.array([[1, 0], [0, 1 if q > 0 else -1]], dtype=object)
    q = abs(q)

    # cisallament amb 0 <= p + q m < q
    m = -(p // q)
    cisalla = np.array([[1, m], [0, 1]], dtype=object)

    transformacio = reticle.matriu(cisalla @ reflexio @ m1)
    a, b = p + q * m, q
    tipus = Tipus.LLIS if b == 1 else Tipus.SINGULAR
    return SurfaceNormalForm(
        tipus=tipus,
        a=int(a),
        b=int(b),
        transform=transformacio,
        ordre=(primer, 1 - primer),
    )


def normalize_surface_cone(c: con.Cone, keep_order: bool = False) -> SurfaceNormalForm:
    """Forma normal d'un con ple de dos raigs a Z^2.

    Args:
        c: Con fortament convex i ple.
        keep_order: Si és cert, el primer raig sempre va a ``e_1``. Altrament s'agafa, d'entre
            els dos ordres, el que dona la parella ``(a, b)`` lexicogràficament menor.
    Retorna:
        SurfaceNormalForm amb ``b == |delta(c)|`` i una transformació unimodular que porta
        els generadors de ``c`` a ``{e_1, a e_1 + b e_2}``.
    """
    con._exigeix_2d(c)
    formes = [_forma_ordenada(c, 0)]
    if not keep_order:
        formes.append(_forma_ordenada(c, 1))
    return min(formes, key=lambda f: (f.a, f.b))


def dual_normal_form(c: con.Cone) -> SurfaceNormalForm:
    """Forma normal del con dual, la que correspon a ``Spec k[sigma^dual ∩ Z^2]``."""
    return normalize_surface_cone(con.dual_cone_2d(c))
