# -*- coding: utf-8 -*-
""" Semigrup ``sigma ∩ Z^2`` d'un con normalitzat ``cone(e_1, a e_1 + b e_2)`` i els estats de la
cerca en amplada que fan servir els oracles d'enumeració.

Totes les comparacions amb la recta ``y = (b/a) x`` es fan per multiplicació creuada.
"""
import math

from base.reticle import ErrorToric


class ParametresInvalids(ErrorToric):
    def __init__(self, a: int, b: int) -> None:
        self.a = a
        self.b = b
        super().__init__(
            f"Paràmetres ({a}, {b}) invàlids: cal 0 < a < b coprimers o bé a = 1, b >= 1"
        )


def valida_parametres(a: int, b: int) -> tuple[int, int]:
    a, b = int(a), int(b)
    if a < 1 or b < 1 or math.gcd(a, b) != 1 or not (a < b or a == 1):
        raise ParametresInvalids(a, b)
    return a, b


class Semigrup:
    """Punts enters del con ``cone(e_1, a e_1 + b e_2)``.

    Un punt ``(x, y)`` hi pertany si ``y >= 0`` i ``b x - a y >= 0``.
    """

    def __init__(self, a: int, b: int):
        self.a, self.b = valida_parametres(a, b)

    @property
    def v(self) -> tuple[int, int]:
        return self.a, self.b

    def conte(self, x: int, y: int) -> bool:
        return y >= 0 and self.b * x - self.a * y >= 0

    def a_la_regio_t(self, x: int, y: int) -> bool:
        """Regió fitada per l'eix x no negatiu, la recta ``a y = b x`` i la recta ``x = a``."""
        return 0 <= x <= self.a and self.conte(x, y)

    def surt_per_e1(self, x: int, y: int) -> bool:
        """Cert si ``p`` és al con però ``p - e_1`` no, és a dir, ``p`` no és a ``xR``."""
        return self.conte(x, y) and not self.conte(x - 1, y)

    def punts_regio_t(self) -> list[tuple[int, int]]:
        return [
            (x, y)
            for x in range(self.a + 1)
            for y in range(self.b * x // self.a + 1)
            if self.a_la_regio_t(x, y)
        ]

    def __str__(self):
        return f"cone((1,0), ({self.a},{self.b}))"


class Punt:
    """Estat de la cerca: un punt del reticle dins una caixa ``[0, amplada] x [0, alcada]``."""

    def __init__(self, x: int, y: int):
        self.x = x
        self.y = y

    def __hash__(self):
        return hash((self.x, self.y))

    def __eq__(self, other):
        return isinstance(other, Punt) and self.x == other.x and self.y == other.y

    @property
    def coordenades(self) -> tuple[int, int]:
        return self.x, self.y

    def _legal(self, caixa: tuple[int, int]) -> bool:
        amplada, alcada = caixa
        return 0 <= self.x <= amplada and 0 <= self.y <= alcada

    def genera_fills(self, generadors, caixa: tuple[int, int]) -> list["Punt"]:
        """ Mètode per generar els estats fills.

        Suma cada generador al punt actual i es queda els que no surten de la caixa.

        Returns:
            Llista d'estats fills generats.
        """
        fills = []
        for gx, gy in generadors:
            fill = Punt(self.x + gx, self.y + gy)
            if fill._legal(caixa):
                fills.append(fill)
        return fills

    def __str__(self):
        return f"({self.x},{self.y})"
