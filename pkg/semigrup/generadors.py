# -*- coding: utf-8 -*-
""" Generadors del semigrup ``sigma ∩ Z^2`` i oracles de generació per cerca en amplada. """
import collections
import logging

from semigrup.punt import Punt, Semigrup


def _descomponible(s: Semigrup, x: int, y: int) -> bool:
    """Cert si ``(x, y)`` és suma de dos elements no nuls del semigrup.

    Els dos sumands tenen coordenades entre 0 i les de ``(x, y)``, per tant n'hi ha prou de
    recórrer aquesta caixa.
    """
    for qx in range(x + 1):
        for qy in range(y + 1):
            if (qx, qy) in ((0, 0), (x, y)):
                continue
            if s.conte(qx, qy) and s.conte(x - qx, y - qy):
                return True
    return False


def hilbert_generators_2d(a: int, b: int) -> list[tuple[int, int]]:
    """Conjunt minimal de generadors de ``sigma ∩ Z^2`` per a ``sigma = cone(e_1, a e_1 + b e_2)``.

    Enumera tots els punts de la regió T i elimina els que es poden escriure com a suma de dos
    elements no nuls. El resultat està ordenat per ``(x, y)`` i sempre conté ``(1, 0)`` i ``(a, b)``.

    Args:
        a: Primer paràmetre del con normalitzat.
        b: Segon paràmetre, ``b = |delta|``.
    Llança:
        ParametresInvalids si ``(a, b)`` no és un con normalitzat ni de la família ``(1, m)``.
    """
    s = Semigrup(a, b)
    generadors = [
        p for p in s.punts_regio_t() if p != (0, 0) and not _descomponible(s, *p)
    ]
    logging.debug("Generadors de %s: %s", s, generadors)
    return sorted(generadors)


def generated_in_box(generators, box: tuple[int, int]) -> set[tuple[int, int]]:
    """Punts de la caixa ``[0, box[0]] x [0, box[1]]`` que són combinació entera no negativa
    dels generadors.

    Els generadors han de tenir coordenades no negatives: així cap camí surt de la caixa i hi
    torna a entrar.
    """
    generadors = [tuple(int(c) for c in g) for g in generators]
    if any(gx < 0 or gy < 0 for gx, gy in generadors):
        raise ValueError("Els generadors han de tenir coordenades no negatives")

    per_visitar = collections.deque([Punt(0, 0)])
    visitats = set()
    while per_visitar:
        actual = per_visitar.popleft()
        if actual in visitats:
            continue
        visitats.add(actual)
        for fill in actual.genera_fills(generadors, box):
            if fill not in visitats:
                per_visitar.append(fill)

    return {p.coordenades for p in visitats}


def nilpotence_witness(a: int, b: int, g: tuple[int, int]) -> int | None:
    """Menor ``l <= 2b`` tal que ``l g - e_1`` és al con, o ``None`` si no n'hi ha.

    Si existeix, la imatge del monomi ``g`` a ``R/xR`` és nilpotent.
    """
    s = Semigrup(a, b)
    x, y = g
    if not s.conte(x, y):
        raise ValueError(f"El punt {tuple(g)} no és al con {s}")
    for l in range(1, 2 * s.b + 1):
        if s.conte(l * x - 1, l * y):
            return l
    return None
