# -*- coding: utf-8 -*-
""" Expressions formals de grups abelians: ``Z^r ⊕ Z/d_1 ⊕ ... ⊕ G_j(k)^c ⊕ (G_i(k)⊗G_j(k))^c``.

La part de torsió es guarda com a cadena de divisors ``d_1 | d_2 | ...``; els termes simbòlics
com a multiconjunt ordenat. ``canonicalize`` és l'única porta d'entrada a la forma canònica i
totes les operacions hi passen.
"""
import collections
import dataclasses
import itertools
import math


@dataclasses.dataclass(frozen=True)
class GK:
    """Una còpia de ``G_j(k)``."""

    j: int

    def __post_init__(self):
        if self.j < 0:
            raise ValueError(f"G_{self.j}(k) no està definit")

    def clau(self) -> tuple:
        return 0, self.j, 0

    def __str__(self):
        return f"G_{self.j}(k)"


@dataclasses.dataclass(frozen=True)
class TensorGK:
    """Una còpia de ``G_i(k) ⊗ G_j(k)`` amb ``i <= j``."""

    i: int
    j: int

    def clau(self) -> tuple:
        return 1, self.i, self.j

    def __str__(self):
        return f"G_{self.i}(k)⊗G_{self.j}(k)"


@dataclasses.dataclass(frozen=True)
class ModTensorGK:
    """Una còpia de ``Z/d ⊗ G_j(k)``, que cap model de cos no ha resolt."""

    d: int
    j: int

    def clau(self) -> tuple:
        return 2, self.j, self.d

    def __str__(self):
        return f"Z/{self.d}⊗G_{self.j}(k)"


Terme = GK | TensorGK | ModTensorGK


@dataclasses.dataclass(frozen=True)
class GroupExpr:
    free_rank: int = 0
    torsion: tuple[int, ...] = ()
    symbolic: tuple[tuple[Terme, int], ...] = ()

    @classmethod
    def zero(cls) -> "GroupExpr":
        return cls()

    @classmethod
    def lliure(cls, r: int) -> "GroupExpr":
        return cls(free_rank=r)

    @classmethod
    def ciclic(cls, d: int) -> "GroupExpr":
        """``Z/d``; ``Z/0`` és ``Z`` i ``Z/1`` és el grup zero."""
        return canonicalize(cls(torsion=(d,)))

    @classmethod
    def gk(cls, j: int, multiplicitat: int = 1) -> "GroupExpr":
        return canonicalize(cls(symbolic=((GK(j), multiplicitat),)))

    def __add__(self, other: "GroupExpr") -> "GroupExpr":
        return canonicalize(
            GroupExpr(
                free_rank=self.free_rank + other.free_rank,
                torsion=self.torsion + other.torsion,
                symbolic=self.symbolic + other.symbolic,
            )
        )

    def multiple(self, c: int) -> "GroupExpr":
        """Suma directa de ``c`` còpies."""
        if c < 0:
            raise ValueError("La multiplicitat ha de ser no negativa")
        return canonicalize(
            GroupExpr(
                free_rank=self.free_rank * c,
                torsion=self.torsion * c,
                symbolic=tuple((t, m * c) for t, m in self.symbolic),
            )
        )

    @property
    def es_zero(self) -> bool:
        return self.free_rank == 0 and not self.torsion and not self.symbolic

    @property
    def ordre_torsio(self) -> int:
        return math.prod(self.torsion)

    def termes(self) -> dict:
        return dict(self.symbolic)

    def pretty(self) -> str:
        return pretty(self)

    def to_dict(self) -> dict:
        return {
            "free_rank": self.free_rank,
            "torsion": list(self.torsion),
            "symbolic": [{"term": str(t), "multiplicity": m} for t, m in self.symbolic],
            "pretty": pretty(self),
        }

    def __str__(self):
        return pretty(self)


def _cadena_divisors(torsio) -> tuple[int, ...]:
    """Factors invariants d_1 | d_2 | ... per intercanvis ``(x, y) -> (mcd, mcm)``.

    ``Z/x ⊕ Z/y ≅ Z/mcd(x, y) ⊕ Z/mcm(x, y)``; no cal factoritzar cap ordre.
    """
    factors = sorted(int(d) for d in torsio)
    for i, j in itertools.combinations(range(len(factors)), 2):
        x, y = factors[i], factors[j]
        if y % x:
            factors[i], factors[j] = math.gcd(x, y), math.lcm(x, y)
    return tuple(f for f in factors if f > 1)


def canonicalize(g: GroupExpr) -> GroupExpr:
    """Forma canònica: cadena de divisors, ``G_0(k)`` plegat a ``Z`` i termes ordenats.

    ``Z/0`` es llegeix com ``Z`` i ``Z/1`` desapareix. Els termes ``Z/d ⊗ G_j(k)`` d'un mateix
    ``j`` s'agrupen en la cadena de divisors dels ``d``, i els tensors amb un factor
    ``G_0(k) = Z`` es redueixen.
    """
    lliure = g.free_rank
    torsio = []
    for d in g.torsion:
        d = abs(int(d))
        if d == 0:
            lliure += 1
        elif d > 1:
            torsio.append(d)

    comptes = collections.Counter()
    moduls = collections.defaultdict(list)
    for terme, m in g.symbolic:
        if m <= 0:
            continue
        match terme:
            case GK(j=0):
                lliure += m
            case GK():
                comptes[terme] += m
            case TensorGK(i=i, j=j):
                i, j = min(i, j), max(i, j)
                if i == 0:
                    comptes[GK(j)] += m
                else:
                    comptes[TensorGK(i, j)] += m
            case ModTensorGK(d=d, j=j):
                d = abs(d)
                if d == 0:
                    comptes[GK(j)] += m
                elif j == 0:
                    torsio.extend([d] * m)
                elif d > 1:
                    moduls[j].extend([d] * m)

    # (⊕ Z/d_i) ⊗ G_j(k) amb la mateixa cadena de divisors que la torsió
    for j, ds in moduls.items():
        comptes.update(ModTensorGK(d, j) for d in _cadena_divisors(ds))

    if GK(0) in comptes:
        lliure += comptes.pop(GK(0))

    simbolic = tuple(sorted(comptes.items(), key=lambda tm: tm[0].clau()))
    return GroupExpr(free_rank=lliure, torsion=_cadena_divisors(torsio), symbolic=simbolic)


def _potencia(text: str, c: int, compost: bool) -> str:
    if c == 1:
        return text
    return f"({text})^{c}" if compost else f"{text}^{c}"


def pretty(g: GroupExpr) -> str:
    """``Z^r ⊕ Z/d_1 ⊕ (Z/d)^c ⊕ G_j(k)^c ⊕ (G_i(k)⊗G_j(k))^c``; el grup zero és ``0``."""
    g = canonicalize(g)
    parts = []
    if g.free_rank:
        parts.append(_potencia("Z", g.free_rank, compost=False))
    for d, grup in itertools.groupby(g.torsion):
        parts.append(_potencia(f"Z/{d}", len(list(grup)), compost=True))
    for terme, m in g.symbolic:
        parts.append(_potencia(str(terme), m, compost=not isinstance(terme, GK)))
    return " ⊕ ".join(parts) if parts else "0"


def _sumands(g: GroupExpr) -> list[tuple[object, int]]:
    """Sumands indescomponibles amb multiplicitat: ``0`` per a ``Z``, ``d`` per a ``Z/d``, o un terme."""
    sumands = []
    if g.free_rank:
        sumands.append((0, g.free_rank))
    for d, grup in itertools.groupby(g.torsion):
        sumands.append((d, len(list(grup))))
    sumands.extend(g.symbolic)
    return sumands


def _tensor_sumands(x, y) -> GroupExpr:
    match x, y:
        case 0, _:
            return _com_grup(y)
        case _, 0:
            return _com_grup(x)
        case int(), int():
            return GroupExpr.ciclic(math.gcd(x, y))
        case int(), GK(j=j):
            return canonicalize(GroupExpr(symbolic=((ModTensorGK(x, j), 1),)))
        case GK(j=j), int():
            return canonicalize(GroupExpr(symbolic=((ModTensorGK(y, j), 1),)))
        case GK(j=i), GK(j=j):
            return canonicalize(GroupExpr(symbolic=((TensorGK(i, j), 1),)))
    raise ValueError(f"El producte tensorial de {x} i {y} no està suportat")


def _com_grup(x) -> GroupExpr:
    if x == 0:
        return GroupExpr.lliure(1)
    if isinstance(x, int):
        return GroupExpr.ciclic(x)
    return canonicalize(GroupExpr(symbolic=((x, 1),)))


def producte_tensorial(g1: GroupExpr, g2: GroupExpr) -> GroupExpr:
    """Producte tensorial sobre Z, expandit bilinealment.

    Regles: ``Z ⊗ A = A``, ``Z/a ⊗ Z/b = Z/mcd(a, b)``, ``Z/a ⊗ G_j(k)`` queda com a terme
    simbòlic i ``G_i(k) ⊗ G_j(k)`` dona un terme ``TensorGK``. Els operands només poden tenir
    termes ``G_j(k)`` purs.
    """
    g1, g2 = canonicalize(g1), canonicalize(g2)
    for g in (g1, g2):
        for terme, _ in g.symbolic:
            if not isinstance(terme, GK):
                raise ValueError(f"L'operand {pretty(g)} conté el terme compost {terme}")

    resultat = GroupExpr.zero()
    for x, mx in _sumands(g1):
        for y, my in _sumands(g2):
            resultat = resultat + _tensor_sumands(x, y).multiple(mx * my)
    return resultat
