# -*- coding: utf-8 -*-
""" Grup de classes de divisors d'una varietat tòrica afí, calculat amb la forma de Smith. """
import logging

from base import reticle
from cons import con
from gteoria import grup
from gteoria.grup import GroupExpr


def class_group_affine(c: con.Cone) -> GroupExpr:
    """Conucli de la matriu que té com a files els generadors minimals de ``c``.

    Args:
        c: Con simplicial i ple dins el seu reticle.
    Retorna:
        GroupExpr finit; en el cas de superfícies el seu ordre és ``|delta|``.
    Llança:
        ConNoSimplicial si el con no és simplicial, ConDegenerat si no és ple.
    """
    if not c.es_simplicial():
        raise con.ConNoSimplicial(c)
    if len(c.rays) != c.rank:
        raise con.ConDegenerat(f"{c} no és ple a Z^{c.rank}")

    files = reticle.matriu([list(r) for r in c.rays])
    snf = reticle.smith_normal_form(files)
    logging.debug("Diagonal de Smith de %s: %s", c, snf.diagonal)
    return grup.canonicalize(
        GroupExpr(free_rank=snf.rang_lliure_conucli(), torsion=tuple(snf.torsio()))
    )
