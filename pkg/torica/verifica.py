# -*- coding: utf-8 -*-
""" Comprovacions creuades entre les fórmules tancades i els oracles independents.

Cada comprovació confronta un valor de fórmula tancada (``esperat``) amb un càlcul per un
altre camí (``obtingut``). Amb ``mutacio`` la constant indicada es desplaça una unitat, i el
verificador ha de detectar-ho.
"""
import pathlib

from base import reticle
from base.comprovacio import Comprovacio, Entrada, Verificador, Veredicte
from chow import classe
from cons import con, superficie, ventall
from gteoria import teoremes
from semigrup import generadors, quocient
from semigrup.punt import Semigrup
from torica import fitxer

MUTACIONS = ("delta", "rank", "betti")


def _cons_2d(f: ventall.Fan) -> list[con.Cone]:
    if f.rank != 2:
        return []
    return [f.con(i) for i, c in enumerate(f.cones) if len(c) == 2]


def _parametres(c: con.Cone) -> tuple[int, int]:
    """Paràmetres ``(a, b)`` del semigrup; el con llis es pren com ``(1, 1)``."""
    forma = superficie.normalize_surface_cone(c)
    if forma.es_llis:
        return 1, 1
    return forma.a, forma.b


class ComprovacioDelta(Comprovacio):
    """``|delta|`` contra el grup de classes, la forma normal i la torsió de ``G_0``."""

    def __init__(self, mutacio=None):
        super().__init__("delta_class_group", mutacio)

    def aplicable(self, entrada: Entrada) -> bool:
        return bool(entrada["cons2d"])

    def comprova(self, entrada: Entrada) -> list[Veredicte]:
        veredictes = []
        for c in entrada["cons2d"]:
            e = Entrada(entrada.to_dict(), nom=f"{entrada.nom} {c}")
            delta = abs(con.delta(c)) + self._desviacio("delta")
            veredictes.append(self._veredicte(
                e, ("delta", "class_group_affine"), delta, classe.class_group_affine(c).ordre_torsio
            ))
            veredictes.append(self._veredicte(
                e, ("delta", "normalize_surface_cone"), delta, superficie.normalize_surface_cone(c).b
            ))
            veredictes.append(self._veredicte(
                e, ("delta", "dual_normal_form"), delta, superficie.dual_normal_form(c).b
            ))
            veredictes.append(self._veredicte(
                e, ("delta", "affine_surface_gtheory"), delta,
                teoremes.affine_surface_gtheory(c, 0).ordre_torsio,
            ))
        return veredictes


class ComprovacioQuocient(Comprovacio):
    """Rang de la base de ``R/xR`` contra la suma de parts enteres i ``|delta|``."""

    def __init__(self, mutacio=None):
        super().__init__("quotient_rank", mutacio)

    def aplicable(self, entrada: Entrada) -> bool:
        return bool(entrada["cons2d"])

    def comprova(self, entrada: Entrada) -> list[Veredicte]:
        veredictes = []
        for c in entrada["cons2d"]:
            e = Entrada(entrada.to_dict(), nom=f"{entrada.nom} {c}")
            a, b = _parametres(c)
            rang = quocient.quotient_basis(a, b).rank
            veredictes.append(self._veredicte(
                e, ("quotient_basis", "floor_sum_identity"),
                quocient.floor_sum_identity(a, b) + self._desviacio("rank"), rang,
            ))
            veredictes.append(self._veredicte(
                e, ("quotient_basis", "delta"), abs(con.delta(c)), rang
            ))
            veredictes.append(self._veredicte(
                e, ("semigroup_ring_gtheory", "affine_surface_gtheory"),
                teoremes.affine_surface_gtheory(c, 0).ordre_torsio,
                teoremes.semigroup_ring_gtheory(a, b, 0).ordre_torsio,
            ))
        return veredictes


class ComprovacioHilbert(Comprovacio):
    """Els generadors de la regió T generen tots els punts del con dins una caixa."""

    MIDA_CAIXA = 3

    def __init__(self, mutacio=None):
        super().__init__("hilbert_generation", mutacio)

    def aplicable(self, entrada: Entrada) -> bool:
        return bool(entrada["cons2d"])

    def comprova(self, entrada: Entrada) -> list[Veredicte]:
        veredictes = []
        for c in entrada["cons2d"]:
            a, b = _parametres(c)
            s = Semigrup(a, b)
            caixa = (self.MIDA_CAIXA * a, self.MIDA_CAIXA * b)
            punts = {
                (x, y)
                for x in range(caixa[0] + 1)
                for y in range(caixa[1] + 1)
                if s.conte(x, y)
            }
            generats = generadors.generated_in_box(generadors.hilbert_generators_2d(a, b), caixa)
            # un punt generat fora del con també és una fallada
            obtinguts = len(generats) if generats <= punts else -len(generats - punts)
            veredictes.append(self._veredicte(
                Entrada(entrada.to_dict(), nom=f"{entrada.nom} {c}"),
                ("hilbert_generators_2d", "generated_in_box"),
                len(punts),
                obtinguts,
            ))
        return veredictes


class ComprovacioBetti(Comprovacio):
    """Palindromia dels Betti parells i ``sum b_2k = |Sigma(n)|`` (característica d'Euler)."""

    def __init__(self, mutacio=None):
        super().__init__("betti", mutacio)

    def aplicable(self, entrada: Entrada) -> bool:
        f = entrada["fan"]
        return bool(f.simplicial) and bool(f.complete)

    def comprova(self, entrada: Entrada) -> list[Veredicte]:
        f = entrada["fan"]
        betti = teoremes.betti_even(f)
        betti[0] += self._desviacio("betti")
        return [
            self._veredicte(entrada, ("betti_even", "palindromia"), betti, betti[::-1]),
            self._veredicte(entrada, ("betti_even", "census"), f.census()[-1], sum(betti)),
        ]


class ComprovacioWps(Comprovacio):
    """Un ventall complet amb ``n + 1`` raigs és un ``P(w)``: es recuperen els pesos del nucli
    de la matriu de raigs i es comparen recompte, rang de ``G_0 ⊗ Q`` i G-teoria."""

    def __init__(self, mutacio=None):
        super().__init__("wps_consistency", mutacio)

    def aplicable(self, entrada: Entrada) -> bool:
        f = entrada["fan"]
        return (
            bool(f.simplicial)
            and bool(f.complete)
            and len(f.rays) == f.rank + 1
        )

    def comprova(self, entrada: Entrada) -> list[Veredicte]:
        f = entrada["fan"]
        nucli = reticle.kernel(reticle.columnes(f.rays, f.rank))
        pesos = [int(x) for x in nucli[:, 0]]
        if all(x <= 0 for x in pesos):
            pesos = [-x for x in pesos]

        if any(x <= 0 for x in pesos):
            return [self._veredicte(entrada, ("kernel",), "pesos positius", pesos)]

        rang = teoremes.wps_gtheory(pesos, 0).free_rank + self._desviacio("rank")
        return [
            self._veredicte(entrada, ("wps_gtheory", "g0_rational_dim"), rang, teoremes.g0_rational_dim(f)),
            self._veredicte(entrada, ("wps_gtheory", "nombre de pesos"), rang, len(pesos)),
            self._veredicte(
                entrada, ("wps_census", "census"), ventall.wps_census(pesos), f.census()
            ),
            self._veredicte(
                entrada, ("wps_fan", "census"), ventall.wps_fan(pesos).census(), f.census()
            ),
        ]


def comprovacions(mutacio: str | None = None) -> list[Comprovacio]:
    if mutacio is not None and mutacio not in MUTACIONS:
        raise ValueError(f"Mutació desconeguda: {mutacio}")
    return [
        ComprovacioDelta(mutacio),
        ComprovacioQuocient(mutacio),
        ComprovacioHilbert(mutacio),
        ComprovacioBetti(mutacio),
        ComprovacioWps(mutacio),
    ]


def entrada_de_ventall(f: ventall.Fan, nom: str) -> Entrada:
    return Entrada({"fan": f, "cons2d": _cons_2d(f)}, nom=nom)


def entrades_de_cataleg(directori) -> list[tuple[Entrada, str, list[str]]]:
    """Entrades de tots els ``*.fan`` d'un directori, en ordre alfabètic.

    Retorna:
        Llista de ``(entrada, text del fitxer, avisos)``.
    """
    resultat = []
    for path in sorted(pathlib.Path(directori).glob("*.fan")):
        ff = fitxer.parse_fan_file(path)
        f = ff.to_fan()
        avisos = list(ff.avisos) + [a for a in f.avisos if a not in ff.avisos]
        resultat.append((entrada_de_ventall(f, path.name), path.read_text(encoding="utf-8"), avisos))
    return resultat


def verifica(entrades: list[Entrada], mutacio: str | None = None, mostra_progres: bool = False):
    verificador = Verificador(comprovacions(mutacio), mostra_progres=mostra_progres)
    return verificador.comencar(entrades), verificador.passa
