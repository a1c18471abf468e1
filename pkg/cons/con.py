# -*- coding: utf-8 -*-
""" Cons racionals polièdrics donats pels seus generadors minimals.

Un con es guarda com el rang del reticle ambient i la llista dels raigs primitius. La
convexitat forta es comprova en rang <= 2; en rang superior es dona per declarada.
"""
import logging

from base import reticle
from base.reticle import ErrorToric


class ConDegenerat(ErrorToric):
    def __init__(self, msg: str) -> None:
        super().__init__(f"Con degenerat: {msg}")


class ConNoSimplicial(ErrorToric):
    def __init__(self, con) -> None:
        super().__init__(f"El con {con} no és simplicial")


def format_vector(v) -> str:
    return "(" + ",".join(str(int(x)) for x in v) + ")"


class Cone:
    """Con fortament convex generat per raigs primitius.

    Args:
        rank: Rang n del reticle ambient Z^n.
        rays: Generadors del con. Els que no són primitius es divideixen pel seu contingut
            i es deixa un avís a ``avisos``.
    """

    def __init__(self, rank: int, rays) -> None:
        if rank < 1:
            raise ValueError("El rang del reticle ha de ser >= 1")

        self.rank = rank
        self.avisos: list[str] = []

        primitius = []
        for raig in rays:
            raig = tuple(int(x) for x in raig)
            if len(raig) != rank:
                raise ConDegenerat(f"el raig {format_vector(raig)} no té rang {rank}")
            if not any(raig):
                raise ConDegenerat("el vector nul no és un raig")
            prim = tuple(reticle.primitive(raig))
            if prim != raig:
                avis = f"raig {format_vector(raig)} normalitzat a {format_vector(prim)}"
                logging.warning(avis)
                self.avisos.append(avis)
            primitius.append(prim)

        if len(set(primitius)) != len(primitius):
            raise ConDegenerat("hi ha raigs repetits")
        for raig in primitius:
            if tuple(-x for x in raig) in primitius:
                raise ConDegenerat(f"conté la recta generada per {format_vector(raig)}")
        if rank <= 2 and len(primitius) > rank:
            raise ConDegenerat(f"{len(primitius)} raigs en rang {rank} no són generadors minimals")

        self.rays = tuple(primitius)

    @property
    def matriu(self) -> reticle.IntMat:
        """Matriu ``rank x len(rays)`` amb els raigs com a columnes."""
        return reticle.columnes(self.rays, self.rank)

    @property
    def dim(self) -> int:
        return reticle.rank_of(self.matriu)

    def es_simplicial(self) -> bool:
        return self.dim == len(self.rays)

    def transformat(self, m: reticle.IntMat) -> "Cone":
        """Imatge del con per una matriu unimodular."""
        return Cone(self.rank, [tuple(reticle.apply(m, r)) for r in self.rays])

    def __eq__(self, other):
        return (
            isinstance(other, Cone)
            and self.rank == other.rank
            and set(self.rays) == set(other.rays)
        )

    def __hash__(self):
        return hash((self.rank, frozenset(self.rays)))

    def __str__(self):
        return "cone(" + ", ".join(format_vector(r) for r in self.rays) + ")"

    def __repr__(self):
        return f"Cone({self.rank}, {list(self.rays)})"


def _exigeix_2d(c: Cone) -> None:
    if c.rank != 2 or len(c.rays) != 2:
        raise ConDegenerat(f"{c} no és un con de dos raigs a Z^2")
    if delta_signat(c) == 0:
        raise ConDegenerat(f"{c} té els raigs col·lineals")


def delta_signat(c: Cone) -> int:
    (x1, y1), (x2, y2) = c.rays
    return x1 * y2 - x2 * y1


def delta(c: Cone) -> int:
    """Determinant de la matriu amb els generadors minimals com a columnes.

    El signe depèn de l'ordre dels raigs; les fórmules fan servir ``abs(delta(c))``.
    """
    _exigeix_2d(c)
    return reticle.det(c.matriu)


def dual_cone_2d(c: Cone) -> Cone:
    """Con dual d'un con ple de Z^2.

    Cada raig aporta la normal primitiva de la seva recta que apunta cap a l'altre raig.
    """
    _exigeix_2d(c)
    u1, u2 = c.rays

    def normal(u, altre):
        n = (-u[1], u[0])
        if n[0] * altre[0] + n[1] * altre[1] < 0:
            n = (u[1], -u[0])
        return n

    return Cone(2, [normal(u1, u2), normal(u2, u1)])


def is_smooth_cone(c: Cone) -> bool:
    """Un con simplicial és llis si els seus raigs formen part d'una base de Z^n."""
    if not c.es_simplicial():
        raise ConNoSimplicial(c)
    if not c.rays:
        return True
    return all(x == 1 for x in reticle.smith_normal_form(c.matriu).diagonal)


def index_con(c: Cone) -> int:
    """Índex del subreticle generat pels raigs dins la seva saturació: ``|delta|`` en el cas ple."""
    if not c.rays:
        return 1
    index = 1
    for x in reticle.smith_normal_form(c.matriu).diagonal:
        if x != 0:
            index *= x
    return index


def smooth_standard_form(c: Cone) -> tuple[reticle.IntMat, int]:
    """Transformació d'un con llis a la seva forma estàndard.

    Retorna:
        Parella ``(A, r)`` amb ``A`` a GL(n, Z) tal que ``A @ u_i = e_i`` per a cada
        generador ``u_i``, i ``r`` el nombre de generadors. Aleshores
        ``U_sigma`` és isomorf a ``A^r x G_m^(n-r)``.
    """
    if not is_smooth_cone(c):
        raise ConDegenerat(f"{c} no és llis")
    base = reticle.extend_to_basis(list(c.rays), c.rank)
    return reticle.inverse_unimodular(base), len(c.rays)


def lemma_cone(m: int) -> Cone:
    """Con ``cone(e_1, e_1 + m e_2)``, que té per anell ``k[x, xy, ..., xy^m]``."""
    if m < 1:
        raise ValueError("m ha de ser un enter positiu")
    return Cone(2, [(1, 0), (1, m)])
