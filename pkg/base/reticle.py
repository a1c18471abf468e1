# -*- coding: utf-8 -*-
""" Mòdul que conté l'àlgebra lineal entera exacta sobre la qual es construeix tota la resta:
mcd estès, determinant de Bareiss, forma normal de Smith, matrius unimodulars i extensió de
bases.

Els vectors i matrius són arrays de numpy amb ``dtype=object``, de manera que cada entrada és
un ``int`` de Python de precisió arbitrària. Un cop construïts són de només lectura.
"""
import dataclasses
import logging

import numpy as np

IntVec = np.ndarray
IntMat = np.ndarray


class ErrorToric(Exception):
    """Excepció arrel de tots els errors del domini."""

    def __init__(self, msg: str) -> None:
        self.message = msg
        super().__init__(self.message)


class MatriuNoQuadrada(ErrorToric):
    def __init__(self, files: int, columnes: int) -> None:
        super().__init__(f"La matriu ha de ser quadrada, és {files}x{columnes}")


class NoExtensible(ErrorToric):
    """Els vectors no formen part de cap base de Z^n."""

    def __init__(self, diagonal: list[int]) -> None:
        self.diagonal = diagonal
        super().__init__(
            f"Els vectors no es poden estendre a una base: diagonal de Smith {diagonal}"
        )


@dataclasses.dataclass(frozen=True)
class SnfResult:
    """Resultat de la forma normal de Smith: ``u @ a @ v == d``."""

    d: IntMat
    u: IntMat
    v: IntMat

    @property
    def diagonal(self) -> list[int]:
        return [self.d[i, i] for i in range(min(self.d.shape))]

    @property
    def rang(self) -> int:
        return sum(1 for x in self.diagonal if x != 0)

    def torsio(self) -> list[int]:
        """Factors invariants estrictament majors que 1 del conucli."""
        return [x for x in self.diagonal if x > 1]

    def rang_lliure_conucli(self) -> int:
        return self.d.shape[0] - self.rang


def _congela(m: np.ndarray) -> np.ndarray:
    m.flags.writeable = False
    return m


def vector(entrades) -> IntVec:
    """Construeix un IntVec de només lectura.

    Args:
        entrades: Seqüència no buida d'enters.
    Retorna:
        Array d'una dimensió amb ``dtype=object``.
    """
    valors = [int(x) for x in entrades]
    if len(valors) < 1:
        raise ValueError("Un vector ha de tenir rang >= 1")
    return _congela(np.array(valors, dtype=object))


def matriu(files, columnes: int | None = None) -> IntMat:
    """Construeix una IntMat de només lectura a partir d'una llista de files.

    Args:
        files: Llista de files (cada una una seqüència d'enters) o un array de numpy.
        columnes: Nombre de columnes, només necessari quan no hi ha cap fila.
    """
    files = [[int(x) for x in fila] for fila in files]
    if not files:
        return _congela(np.zeros((0, columnes or 0), dtype=object))
    amplada = len(files[0])
    if any(len(fila) != amplada for fila in files):
        raise ValueError("Totes les files han de tenir la mateixa longitud")
    m = np.zeros((len(files), amplada), dtype=object)
    for i, fila in enumerate(files):
        for j, x in enumerate(fila):
            m[i, j] = x
    return _congela(m)


def columnes(vectors: list, rang: int) -> IntMat:
    """Matriu ``rang x len(vectors)`` que té els vectors donats com a columnes."""
    m = np.zeros((rang, len(vectors)), dtype=object)
    for j, v in enumerate(vectors):
        if len(v) != rang:
            raise ValueError(f"El vector {tuple(v)} no té rang {rang}")
        for i in range(rang):
            m[i, j] = int(v[i])
    return _congela(m)


def identitat(n: int) -> IntMat:
    m = np.zeros((n, n), dtype=object)
    for i in range(n):
        m[i, i] = 1
    return _congela(m)


def _copia(m: np.ndarray) -> np.ndarray:
    c = np.zeros(m.shape, dtype=object)
    for idx in np.ndindex(m.shape):
        c[idx] = int(m[idx])
    return c


def gcd_ext(a: int, b: int) -> tuple[int, int, int]:
    """Algorisme d'Euclides estès.

    Retorna:
        Tupla ``(g, s, t)`` amb ``g = mcd(|a|, |b|) >= 0`` i ``s*a + t*b = g``.
        ``gcd_ext(0, 0) == (0, 0, 0)``.
    """
    a, b = int(a), int(b)
    if a == 0 and b == 0:
        return 0, 0, 0

    r0, r1 = abs(a), abs(b)
    s0, s1 = 1, 0
    t0, t1 = 0, 1
    while r1 != 0:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1

    signe_a = -1 if a < 0 else 1
    signe_b = -1 if b < 0 else 1
    return r0, s0 * signe_a, t0 * signe_b


def _matriu_euclides(a: int, b: int) -> np.ndarray:
    """Matriu 2x2 de determinant 1 amb ``M @ [a, b] = [±mcd(a, b), 0]``.

    Si ``a`` divideix ``b`` la primera fila és ``[1, 0]``: la fila del pivot no canvia.
    """
    if a != 0 and b % a == 0:
        return np.array([[1, 0], [-(b // a), 1]], dtype=object)
    g, s, t = gcd_ext(a, b)
    return np.array([[s, t], [-b // g, a // g]], dtype=object)


def content(v) -> int:
    """Mcd de les entrades d'un vector (0 per al vector nul)."""
    g = 0
    for x in v:
        g = gcd_ext(g, x)[0]
    return g


def primitive(v) -> IntVec:
    """Divideix el vector pel seu contingut."""
    g = content(v)
    if g == 0:
        raise ValueError("El vector nul no té vector primitiu")
    return vector([int(x) // g for x in v])


def det(m: IntMat) -> int:
    """Determinant exacte per eliminació sense fraccions de Bareiss."""
    files, cols = m.shape
    if files != cols:
        raise MatriuNoQuadrada(files, cols)
    n = files
    if n == 0:
        return 1

    a = [[int(m[i, j]) for j in range(n)] for i in range(n)]
    signe = 1
    pivot_previ = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            # cerca un pivot no nul a la columna
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    signe = -signe
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) // pivot_previ
        pivot_previ = a[k][k]
    return signe * a[n - 1][n - 1]


def is_unimodular(m: IntMat) -> bool:
    return det(m) in (1, -1)


def smith_normal_form(m: IntMat) -> SnfResult:
    """Forma normal de Smith d'una matriu entera qualsevol.

    Alterna la neteja de la columna i la fila del pivot amb operacions unimodulars de 2x2
    fins que totes dues queden netes, i després força la cadena de divisibilitat sumant a la
    fila del pivot qualsevol fila amb una entrada no divisible.

    Retorna:
        SnfResult amb ``u @ m @ v == d``, ``u`` i ``v`` unimodulars, diagonal no negativa
        ``d_1 | d_2 | ...`` i els zeros al final.
    """
    d = _copia(m)
    files, cols = d.shape
    u = _copia(identitat(files))
    v = _copia(identitat(cols))

    def neteja_columna(i: int) -> bool:
        canvi = False
        for j in range(i + 1, files):
            if d[j, i] == 0:
                continue
            e = _matriu_euclides(d[i, i], d[j, i])
            d[[i, j]] = e @ d[[i, j]]
            u[[i, j]] = e @ u[[i, j]]
            canvi = True
        return canvi

    def neteja_fila(i: int) -> bool:
        canvi = False
        for j in range(i + 1, cols):
            if d[i, j] == 0:
                continue
            e = _matriu_euclides(d[i, i], d[i, j]).T
            d[:, [i, j]] = d[:, [i, j]] @ e
            v[:, [i, j]] = v[:, [i, j]] @ e
            canvi = True
        return canvi

    for i in range(min(files, cols)):
        no_nuls = [(r, c) for r in range(i, files) for c in range(i, cols) if d[r, c] != 0]
        if not no_nuls:
            break
        r, c = min(no_nuls, key=lambda rc: abs(d[rc]))
        if r != i:
            d[[i, r]] = d[[r, i]]
            u[[i, r]] = u[[r, i]]
        if c != i:
            d[:, [i, c]] = d[:, [c, i]]
            v[:, [i, c]] = v[:, [c, i]]

        while True:
            neteja_columna(i)
            if neteja_fila(i):
                continue
            if any(d[j, i] != 0 for j in range(i + 1, files)):
                continue

            fila_dolenta = next(
                (
                    r
                    for r in range(i + 1, files)
                    for c in range(i + 1, cols)
                    if d[r, c] % d[i, i] != 0
                ),
                None,
            )
            if fila_dolenta is None:
                break
            d[i] = d[i] + d[fila_dolenta]
            u[i] = u[i] + u[fila_dolenta]

        if d[i, i] < 0:
            d[i] = -d[i]
            u[i] = -u[i]

    return SnfResult(d=_congela(d), u=_congela(u), v=_congela(v))


def inverse_unimodular(m: IntMat) -> IntMat:
    """Inversa exacta d'una matriu unimodular: ``u @ m @ v = I`` implica ``m^-1 = v @ u``."""
    files, cols = m.shape
    if files != cols:
        raise MatriuNoQuadrada(files, cols)
    if not is_unimodular(m):
        raise ValueError("La matriu no és unimodular")
    snf = smith_normal_form(m)
    return _congela(snf.v @ snf.u)


def apply(m: IntMat, v) -> IntVec:
    """Producte exacte matriu per vector."""
    return vector(m @ np.array([int(x) for x in v], dtype=object))


def producte(a: IntMat, b: IntMat) -> IntMat:
    return _congela(_copia(a @ b))


def kernel(m: IntMat) -> IntMat:
    """Matriu les columnes de la qual són una base del nucli enter de ``m``."""
    snf = smith_normal_form(m)
    nuls = [j for j in range(m.shape[1]) if j >= snf.rang]
    return _congela(_copia(snf.v[:, nuls]))


def rank_of(m: IntMat) -> int:
    if 0 in m.shape:
        return 0
    return smith_normal_form(m).rang


def extend_to_basis(vectors: list, n: int) -> IntMat:
    """Estén una família de vectors a una base de Z^n.

    Args:
        vectors: Llista de vectors de rang n que formen part d'una base.
        n: Rang del reticle.
    Retorna:
        Matriu unimodular n x n les primeres columnes de la qual són els vectors donats.
    Llança:
        NoExtensible si la forma de Smith dels vectors té alguna entrada diferent de 1.
    """
    k = len(vectors)
    if k == 0:
        return identitat(n)
    if k > n:
        raise NoExtensible([])

    b = columnes(vectors, n)
    snf = smith_normal_form(b)
    diagonal = snf.diagonal
    if any(x != 1 for x in diagonal):
        raise NoExtensible(diagonal)

    # b = u^-1 [I; 0] v^-1, i per tant w = u^-1 diag(v^-1, I) comença per b
    u_inv = inverse_unimodular(snf.u)
    bloc = _copia(identitat(n))
    bloc[:k, :k] = inverse_unimodular(snf.v)
    w = _congela(_copia(u_inv @ bloc))

    logging.debug("Base estesa de %s vectors a Z^%s", k, n)
    return w
