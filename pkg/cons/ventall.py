# -*- coding: utf-8 -*-
""" Ventalls simplicials: marques de simplicialitat, llisor i completesa, recompte de cons per
dimensió i constructors dels ventalls estàndard (espais projectius ponderats, superfícies de
Hirzebruch i el ventall de la resolució de ``Spec k[x, xy, ..., xy^d]``).
"""
import enum
import functools
import itertools
import logging

from scipy import optimize, special

from base import reticle
from base.reticle import ErrorToric
from cons import con


class VentallInvalid(ErrorToric):
    def __init__(self, msg: str) -> None:
        super().__init__(f"Ventall invàlid: {msg}")


class PesosInvalids(ErrorToric):
    def __init__(self, pesos) -> None:
        self.pesos = pesos
        super().__init__(f"Els pesos {tuple(pesos)} han de ser almenys dos enters positius coprimers")


class Marca(enum.Enum):
    VERIFICADA = "verified"
    DECLARADA = "declared"
    FALSA = "false"

    def __bool__(self):
        return self is not Marca.FALSA


def _semipla(v) -> int:
    """0 per als angles de [0, pi), 1 per als de [pi, 2 pi)."""
    x, y = v
    return 0 if (y > 0 or (y == 0 and x > 0)) else 1


def _ordena_per_angle(raigs: list[tuple[int, int]]) -> list[int]:
    def compara(i, j):
        si = _semipla(raigs[i])
        sj = _semipla(raigs[j])
        if si != sj:
            return si - sj
        (x1, y1), (x2, y2) = raigs[i], raigs[j]
        creu = x1 * y2 - x2 * y1
        return -1 if creu > 0 else (1 if creu < 0 else 0)

    return sorted(range(len(raigs)), key=functools.cmp_to_key(compara))


class Fan:
    """Ventall donat per una llista global de raigs i els cons maximals com a índexs.

    Args:
        rank: Rang del reticle.
        rays: Raigs (es normalitzen a primitius).
        cones: Cons maximals, cada un com a seqüència d'índexs de ``rays``.
        complete: Completesa declarada. En rang <= 2 es verifica exactament i la declaració
            només es contrasta; en rang superior es dona per declarada després de comprovar
            que els raigs generen positivament l'espai.
        name: Metadada lliure.
    """

    def __init__(self, rank: int, rays, cones, complete: bool | None = None, name: str = ""):
        self.rank = rank
        self.name = name
        self.avisos: list[str] = []

        primitius = []
        for r in rays:
            c = con.Cone(rank, [r])
            self.avisos.extend(c.avisos)
            if c.rays[0] in primitius:
                j = primitius.index(c.rays[0])
                raise VentallInvalid(
                    f"els raigs {j} i {len(primitius)} generen el mateix raig {con.format_vector(c.rays[0])}"
                )
            primitius.append(c.rays[0])
        self.rays = tuple(primitius)

        maximals = []
        for indexs in cones:
            indexs = tuple(sorted(int(i) for i in indexs))
            if any(i < 0 or i >= len(self.rays) for i in indexs):
                raise VentallInvalid(f"el con {indexs} fa referència a un raig inexistent")
            maximals.append(indexs)
        self.cones = tuple(maximals)

        self.simplicial = (
            Marca.VERIFICADA if all(self.con(i).es_simplicial() for i in range(len(self.cones)))
            else Marca.FALSA
        )
        if self.simplicial:
            llis = all(con.is_smooth_cone(self.con(i)) for i in range(len(self.cones)))
            self.smooth = Marca.VERIFICADA if llis else Marca.FALSA
        else:
            self.smooth = Marca.FALSA
        self.complete = self.__marca_completesa(complete)

    def con(self, i: int) -> con.Cone:
        return con.Cone(self.rank, [self.rays[j] for j in self.cones[i]])

    def __marca_completesa(self, declarada: bool | None) -> Marca:
        if self.rank <= 2:
            verificada = self.is_complete_low_rank()
            if declarada is not None and declarada != verificada:
                avis = f"completesa declarada {declarada} però verificada {verificada}"
                logging.warning(avis)
                self.avisos.append(avis)
            return Marca.VERIFICADA if verificada else Marca.FALSA

        if not declarada:
            return Marca.FALSA
        if not self.__genera_positivament():
            raise VentallInvalid("declarat complet però els raigs no generen positivament Q^n")
        return Marca.DECLARADA

    def __genera_positivament(self) -> bool:
        """Comprovació de sanitat: existeix ``lambda > 0`` amb ``sum lambda_i u_i = 0`` i rang ple."""
        if reticle.rank_of(reticle.columnes(self.rays, self.rank)) != self.rank:
            return False
        m = len(self.rays)
        # variables (lambda_1..lambda_m, t): maximitza t amb lambda_i >= t, t <= 1
        c = [0] * m + [-1]
        a_eq = [[int(r[i]) for r in self.rays] + [0] for i in range(self.rank)]
        b_eq = [0] * self.rank
        a_ub = [[-1 if j == i else 0 for j in range(m)] + [1] for i in range(m)]
        b_ub = [0] * m
        fites = [(0, None)] * m + [(None, 1)]
        res = optimize.linprog(c, A_ub=a_ub, b_ub=b_ub, A_eq=a_eq, b_eq=b_eq, bounds=fites)
        return bool(res.success and -res.fun > 1e-9)

    def is_complete_low_rank(self) -> bool:
        if self.rank == 1:
            usats = {self.rays[i] for indexs in self.cones for i in indexs}
            return {(1,), (-1,)} <= usats

        if self.rank != 2:
            raise VentallInvalid("la completesa només es verifica exactament en rang <= 2")
        return is_complete_2d(self)

    def census(self) -> list[int]:
        """Nombre de cons ``|Sigma(i)|`` de cada dimensió ``i = 0..n``, inclòs el con zero."""
        if not self.simplicial:
            raise VentallInvalid("el recompte només està definit per a ventalls simplicials")
        cares = set()
        for indexs in self.cones:
            for k in range(len(indexs) + 1):
                cares.update(itertools.combinations(indexs, k))
        comptes = [0] * (self.rank + 1)
        for cara in cares:
            comptes[len(cara)] += 1
        return comptes

    def __str__(self):
        return self.name or f"Fan(rank={self.rank}, rays={len(self.rays)}, cones={len(self.cones)})"


def census(f: Fan) -> list[int]:
    return f.census()


def is_complete_2d(f: Fan) -> bool:
    """Completesa exacta d'un ventall de Z^2.

    Ordena els raigs per angle i exigeix que cada parella consecutiva (cíclicament) sigui un
    con llistat amb un gir estrictament menor que pi, i que no hi hagi cap altre con de dos raigs.
    """
    if f.rank != 2 or len(f.rays) < 3:
        return False
    ordre = _ordena_per_angle(list(f.rays))
    parelles = set()
    for k, i in enumerate(ordre):
        j = ordre[(k + 1) % len(ordre)]
        (x1, y1), (x2, y2) = f.rays[i], f.rays[j]
        if x1 * y2 - x2 * y1 <= 0:
            return False
        parelles.add(tuple(sorted((i, j))))
    dos = {c for c in f.cones if len(c) == 2}
    return dos == parelles


def _valida_pesos(weights) -> list[int]:
    pesos = [int(w) for w in weights]
    if len(pesos) < 2 or any(w <= 0 for w in pesos) or reticle.content(pesos) != 1:
        raise PesosInvalids(pesos)
    return pesos


def wps_fan(weights) -> Fan:
    """Ventall de l'espai projectiu ponderat ``P(a_0, ..., a_d)``.

    El reticle ``N = Z^(d+1) / Z (a_0, ..., a_d)`` es realitza dins ``Z^d`` amb la forma de
    Smith del vector de pesos: si ``u @ w = e_1`` la projecció ``x -> (u @ x)[1:]`` és un
    isomorfisme ``N -> Z^d``. Els raigs són les imatges de la base estàndard i els cons maximals
    són tots els subconjunts de ``d`` raigs.
    """
    pesos = _valida_pesos(weights)
    d = len(pesos) - 1
    snf = reticle.smith_normal_form(reticle.columnes([pesos], d + 1))
    u = snf.u
    raigs = [tuple(int(u[i, j]) for i in range(1, d + 1)) for j in range(d + 1)]
    cons = list(itertools.combinations(range(d + 1), d))
    nom = "P(" + ",".join(str(w) for w in pesos) + ")"
    logging.info("Ventall de %s amb raigs %s", nom, raigs)
    return Fan(d, raigs, cons, complete=True, name=nom)


def projective_fan(d: int) -> Fan:
    raigs = [tuple(int(i == j) for j in range(d)) for i in range(d)]
    raigs.append(tuple([-1] * d))
    return Fan(d, raigs, itertools.combinations(range(d + 1), d), complete=True, name=f"P^{d}")


def hirzebruch_fan(r: int) -> Fan:
    raigs = [(1, 0), (0, 1), (-1, r), (0, -1)]
    return Fan(2, raigs, [(0, 1), (1, 2), (2, 3), (3, 0)], complete=True, name=f"F_{r}")


def resolution_fan(d: int) -> Fan:
    """Ventall obtingut afegint el raig ``e_1`` al con ``cone(e_2, d e_1 - e_2)``."""
    if d < 1:
        raise ValueError("d ha de ser un enter positiu")
    raigs = [(0, 1), (1, 0), (d, -1)]
    return Fan(2, raigs, [(0, 1), (1, 2)], name=f"resolucio d={d}")


def wps_census(weights) -> list[int]:
    """Recompte esperat per a ``P(a_0..a_d)``: ``C(d+1, i)``."""
    d = len(_valida_pesos(weights)) - 1
    return [int(special.comb(d + 1, i, exact=True)) for i in range(d + 1)]
