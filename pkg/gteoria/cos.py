# -*- coding: utf-8 -*-
""" Models del cos base i avaluació dels termes ``G_j(k)``.

Sobre un cos finit ``F_q`` els grups són coneguts: ``G_0 = Z``, ``G_(2i-1) = Z/(q^i - 1)`` i
``G_(2i) = 0`` per a ``i > 0``. Sobre un cos algebraicament tancat de característica zero i en
el model simbòlic els termes es mantenen tal com són.
"""
import dataclasses
import enum

import sympy

from base.reticle import ErrorToric
from gteoria import grup
from gteoria.grup import GK, GroupExpr, ModTensorGK, TensorGK


class CosInvalid(ErrorToric):
    def __init__(self, msg: str) -> None:
        super().__init__(f"Model de cos invàlid: {msg}")


class HipotesiViolada(ErrorToric):
    def __init__(self, operacio: str, model) -> None:
        self.operacio = operacio
        self.model = model
        super().__init__(f"{operacio} requereix un cos algebraicament tancat de característica 0, no {model}")


class TipusCos(enum.Enum):
    ALG_CLOSED_CHAR0 = "algclosed0"
    FINITE_FIELD = "fq"
    SYMBOLIC = "symbolic"


@dataclasses.dataclass(frozen=True)
class FieldModel:
    variant: TipusCos
    q: int | None = None

    def __post_init__(self):
        if self.variant is TipusCos.FINITE_FIELD:
            if self.q is None or self.q < 2:
                raise CosInvalid(f"l'ordre {self.q} ha de ser >= 2")
            if len(sympy.factorint(self.q)) != 1:
                raise CosInvalid(f"l'ordre {self.q} no és potència d'un primer")
        elif self.q is not None:
            raise CosInvalid(f"{self.variant.value} no admet ordre")

    @classmethod
    def alg_closed_char0(cls) -> "FieldModel":
        return cls(TipusCos.ALG_CLOSED_CHAR0)

    @classmethod
    def finite_field(cls, q: int) -> "FieldModel":
        return cls(TipusCos.FINITE_FIELD, int(q))

    @classmethod
    def symbolic(cls) -> "FieldModel":
        return cls(TipusCos.SYMBOLIC)

    @classmethod
    def parse(cls, text: str) -> "FieldModel":
        """Llegeix ``algclosed0``, ``fq:<q>`` o ``symbolic``."""
        text = text.strip()
        if text == TipusCos.ALG_CLOSED_CHAR0.value:
            return cls.alg_closed_char0()
        if text == TipusCos.SYMBOLIC.value:
            return cls.symbolic()
        if text.startswith("fq:"):
            try:
                q = int(text[3:])
            except ValueError:
                raise CosInvalid(f"'{text}' no té un ordre enter") from None
            return cls.finite_field(q)
        raise CosInvalid(f"'{text}' no és algclosed0, fq:<q> ni symbolic")

    @property
    def es_finit(self) -> bool:
        return self.variant is TipusCos.FINITE_FIELD

    @property
    def es_alg_tancat(self) -> bool:
        return self.variant is TipusCos.ALG_CLOSED_CHAR0

    def __str__(self):
        if self.es_finit:
            return f"fq:{self.q}"
        return self.variant.value


def _gk_finit(j: int, q: int) -> GroupExpr:
    if j == 0:
        return GroupExpr.lliure(1)
    if j % 2 == 0:
        return GroupExpr.zero()
    return GroupExpr.ciclic(q ** ((j + 1) // 2) - 1)


def evaluate(g: GroupExpr, f: FieldModel) -> GroupExpr:
    """Substitueix els termes simbòlics pel seu valor quan el model de cos el coneix."""
    g = grup.canonicalize(g)
    if not f.es_finit:
        return g

    resultat = GroupExpr(free_rank=g.free_rank, torsion=g.torsion)
    for terme, m in g.symbolic:
        match terme:
            case GK(j=j):
                valor = _gk_finit(j, f.q)
            case TensorGK(i=i, j=j):
                valor = grup.producte_tensorial(_gk_finit(i, f.q), _gk_finit(j, f.q))
            case ModTensorGK(d=d, j=j):
                valor = grup.producte_tensorial(GroupExpr.ciclic(d), _gk_finit(j, f.q))
        resultat = resultat + valor.multiple(m)
    return grup.canonicalize(resultat)


def tensor(g1: GroupExpr, g2: GroupExpr, f: FieldModel) -> GroupExpr:
    """Producte tensorial sobre Z després d'avaluar tots dos operands en el model ``f``."""
    return evaluate(grup.producte_tensorial(evaluate(g1, f), evaluate(g2, f)), f)


def _exigeix_gk(terme, f: FieldModel) -> int:
    if not isinstance(terme, GK):
        raise ValueError(f"{terme} no és un terme G_j(k)")
    if not f.es_alg_tancat:
        raise HipotesiViolada("L'estructura de G_j(k)", f)
    return terme.j


def is_divisible(terme: GK, f: FieldModel) -> bool:
    """``G_j(k)`` és divisible per a tot ``j > 0`` sobre un cos algebraicament tancat de car. 0."""
    return _exigeix_gk(terme, f) > 0


def is_uniquely_divisible(terme: GK, f: FieldModel) -> bool:
    j = _exigeix_gk(terme, f)
    return j > 0 and j % 2 == 0


def has_QmodZ_summand(terme: GK, f: FieldModel) -> bool:
    """Per a ``j`` senar, ``G_j(k)`` és un grup únicament divisible més ``Q/Z``."""
    return _exigeix_gk(terme, f) % 2 == 1
