# -*- coding: utf-8 -*-
""" Subordres de la línia d'ordres i el seu despatx.

``run_command`` retorna l'informe i el codi de sortida: 0 si tot ha anat bé, 1 si l'entrada és
incorrecta i 2 si alguna comprovació creuada falla.
"""
import argparse
import logging
import pathlib
import sys

import pandas as pd

from base.reticle import ErrorToric
from chow import a2, classe
from cons import con, superficie, ventall
from gteoria import teoremes
from gteoria.cos import FieldModel
from semigrup import generadors, quocient
from torica import fitxer, verifica
from torica.informe import Informe

CATALEG = pathlib.Path(__file__).resolve().parent.parent / "cataleg"


class ErrorArguments(ErrorToric):
    def __init__(self, msg: str) -> None:
        super().__init__(f"Arguments incorrectes: {msg}")


class Analitzador(argparse.ArgumentParser):
    """ArgumentParser que converteix els errors d'ús en ErrorArguments (codi de sortida 1)."""

    def error(self, message):
        raise ErrorArguments(message)


def _enters(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"'{text}' no és una llista d'enters separats per comes") from None


def _raigs(text: str) -> list[tuple[int, ...]]:
    """``"1,0;7,5"`` -> ``[(1, 0), (7, 5)]``."""
    raigs = [tuple(_enters(r)) for r in text.split(";") if r.strip()]
    if not raigs:
        raise ErrorArguments(f"'{text}' no conté cap raig")
    return raigs


def configura_registre(nivell: str) -> None:
    logging.basicConfig(
        format="%(levelname)-8s: %(asctime)s: %(message)s",
        datefmt="%Y-%m-%d %H:%M:%S",
        level=getattr(logging, nivell),
        stream=sys.stderr,
    )


def _cos(args, defecte: FieldModel) -> FieldModel:
    return FieldModel.parse(args.field) if args.field else defecte


def _ventall_de_fitxer(args, informe: Informe) -> ventall.Fan:
    path = pathlib.Path(args.fitxer)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise ErrorArguments(f"no es pot llegir {path}: {e.strerror}") from None
    informe.afegeix_entrada(text)
    if args.json:
        ff = fitxer.parse_fan_json(text, origen=str(path))
    else:
        ff = fitxer.parse_fan_text(text, origen=str(path))
    informe.afegeix_avisos(ff.avisos)
    f = ff.to_fan()
    informe.afegeix_avisos(f.avisos)
    return f


def _cons(args, informe: Informe) -> list[con.Cone]:
    """Cons de ``--rays``, del fitxer de ventall o el con zero de ``--rank``."""
    if getattr(args, "rays", None):
        raigs = _raigs(args.rays)
        c = con.Cone(len(raigs[0]), raigs)
        informe.afegeix_avisos(c.avisos)
        return [c]
    if getattr(args, "fitxer", None):
        f = _ventall_de_fitxer(args, informe)
        return [f.con(i) for i in range(len(f.cones))]
    if getattr(args, "rank", None):
        return [con.Cone(args.rank, [])]
    raise ErrorArguments("cal --rays o un fitxer de ventall")


def _es_superficie(c: con.Cone) -> bool:
    return c.rank == 2 and len(c.rays) == 2


def _normalize(args, informe: Informe) -> None:
    for c in _cons(args, informe):
        if not _es_superficie(c):
            informe.afegeix_resultat("is_smooth_cone", str(c), con.is_smooth_cone(c))
            continue
        forma = superficie.normalize_surface_cone(c)
        informe.afegeix_resultat("normalize_surface_cone", str(c), str(forma))
        informe.afegeix_resultat(
            "normalize_surface_cone", f"transform {c}", [list(map(int, fila)) for fila in forma.transform]
        )
        informe.afegeix_resultat("delta", str(c), con.delta(c))
        informe.afegeix_resultat("dual_normal_form", str(c), str(superficie.dual_normal_form(c)))


def _gtheory_superficie(args, informe: Informe) -> None:
    f = _cos(args, FieldModel.alg_closed_char0())
    if args.m is not None:
        for n in args.degree:
            informe.afegeix_resultat(
                "monomial_surface_gtheory",
                f"G_{n}(Spec k[x, xy, ..., xy^{args.m}])",
                teoremes.monomial_surface_gtheory(args.m, n, f),
                convencio=teoremes.CONVENCIONS["monomial_surface_gtheory"],
            )
        return
    for c in _cons(args, informe):
        for n in args.degree:
            informe.afegeix_resultat(
                "affine_surface_gtheory",
                f"G_{n}(U) {c}",
                teoremes.affine_surface_gtheory(c, n, f),
                convencio=teoremes.CONVENCIONS["affine_surface_gtheory"],
            )


def _nom_pesos(pesos) -> str:
    return "P(" + ",".join(str(p) for p in pesos) + ")"


def _gtheory_wps(args, informe: Informe) -> None:
    f = _cos(args, FieldModel.symbolic())
    for n in args.degree:
        informe.afegeix_resultat(
            "wps_gtheory", f"G_{n}({_nom_pesos(args.weights)})", teoremes.wps_gtheory(args.weights, n, f)
        )
        if args.trace:
            informe.afegeix_traca(f"wps_gtheory n={n}", teoremes.wps_derivation(args.weights, n))


def _gtheory_resolucio(args, informe: Informe) -> None:
    f = _cos(args, FieldModel.symbolic())
    for n in args.degree:
        informe.afegeix_resultat(
            "resolution_gtheory", f"G_{n}(X~) d={args.d}", teoremes.resolution_gtheory(args.d, n, f)
        )
        if args.trace:
            informe.afegeix_traca(f"resolution_gtheory n={n}", teoremes.resolution_derivation(args.d, n))


def _gtheory_producte(args, informe: Informe) -> None:
    f = _cos(args, FieldModel.symbolic())
    for n in args.degree:
        informe.afegeix_resultat(
            "kunneth_product",
            f"G_{n}({_nom_pesos(args.x)} × {_nom_pesos(args.y)})",
            teoremes.wps_product_gtheory(args.x, args.y, n, f),
        )


def _betti(args, informe: Informe) -> None:
    if args.weights:
        f = ventall.wps_fan(args.weights)
        informe.afegeix_avisos(f.avisos)
    elif args.fitxer:
        f = _ventall_de_fitxer(args, informe)
    else:
        raise ErrorArguments("cal un fitxer de ventall o --weights")

    comptes = f.census()
    betti = teoremes.betti_even(f)
    informe.afegeix_taula("census", pd.DataFrame({"i": range(len(comptes)), "|Sigma(i)|": comptes}))
    informe.afegeix_taula(
        "betti", pd.DataFrame({"k": range(len(betti)), "grau": [2 * k for k in range(len(betti))], "b_2k": betti})
    )
    informe.afegeix_resultat("census", str(f), comptes)
    informe.afegeix_resultat("betti_even", str(f), betti)
    informe.afegeix_resultat("g0_rational_dim", str(f), teoremes.g0_rational_dim(f))


def _punt(p) -> str:
    return con.format_vector(p)


def _semigroup(args, informe: Informe) -> None:
    if args.m is not None:
        parelles = [(1, args.m)]
    elif args.a is not None and args.b is not None:
        parelles = [(args.a, args.b)]
    elif args.fitxer:
        parelles = []
        for c in _cons(args, informe):
            if _es_superficie(c):
                forma = superficie.normalize_surface_cone(c)
                parelles.append((1, 1) if forma.es_llis else (forma.a, forma.b))
    else:
        raise ErrorArguments("cal --a i --b, --m o un fitxer de ventall")

    for a, b in parelles:
        clau = f"a={a} b={b}"
        base = quocient.quotient_basis(a, b)
        informe.afegeix_resultat("hilbert_generators_2d", clau, [_punt(g) for g in base.generators])
        informe.afegeix_resultat("quotient_basis", clau, [_punt(p) for p in base.quotient_basis])
        informe.afegeix_resultat("quotient_basis", f"rank {clau}", base.rank)
        informe.afegeix_resultat("floor_sum_identity", clau, quocient.floor_sum_identity(a, b))
        informe.afegeix_resultat("boundary_image", clau, base.rank)
        for g in base.generators:
            if g != (a, b):
                l = generadors.nilpotence_witness(a, b, g)
                informe.afegeix_resultat("nilpotence_witness", f"{clau} {_punt(g)}", l)
        if not base.consistent:
            informe.afegeix_avisos([f"rang {base.rank} diferent de b = {b} per a {clau}"])
        if not base.estable:
            informe.afegeix_avisos([f"la base del quocient no és estable en doblar la caixa per a {clau}"])
    if args.m is not None:
        for p in range(1, args.m + 1):
            exponent, a_xr = quocient.nilradical_relation(args.m, p)
            informe.afegeix_resultat(
                "nilradical_relation", f"(xy^{p})^{args.m}", {"exponent": list(exponent), "in_xR": a_xr}
            )


def _chow(args, informe: Informe) -> None:
    for c in _cons(args, informe):
        clau = str(c)
        if c.es_simplicial() and len(c.rays) == c.rank:
            informe.afegeix_resultat("class_group_affine", clau, classe.class_group_affine(c))
        if c.es_simplicial() and con.is_smooth_cone(c):
            resultat = a2.a2_smooth_affine(c)
            informe.afegeix_resultat("a2_smooth_affine", clau, resultat.group)
            informe.afegeix_traca(f"a2_smooth_affine {clau}", resultat.traca)
        informe.afegeix_resultat("conjecture_check", clau, a2.conjecture_check(c))


def _verify(args, informe: Informe) -> None:
    entrades = []
    if args.catalog:
        for entrada, text, avisos in verifica.entrades_de_cataleg(args.catalog):
            informe.afegeix_entrada(text)
            informe.afegeix_avisos(avisos)
            entrades.append(entrada)
        if not entrades:
            raise ErrorArguments(f"no hi ha cap fitxer .fan a {args.catalog}")
    elif args.weights:
        f = ventall.wps_fan(args.weights)
        entrades.append(verifica.entrada_de_ventall(f, str(f)))
    elif args.fitxer:
        f = _ventall_de_fitxer(args, informe)
        entrades.append(verifica.entrada_de_ventall(f, pathlib.Path(args.fitxer).name))
    else:
        raise ErrorArguments("cal un fitxer de ventall, --catalog o --weights")

    mostra = args.format == "text" and sys.stderr.isatty()
    veredictes, _ = verifica.verifica(entrades, mutacio=args.mutate, mostra_progres=mostra)
    informe.afegeix_veredictes(veredictes)


def _catalog(args, informe: Informe) -> None:
    files = []
    for path in sorted(pathlib.Path(args.directori).glob("*.fan")):
        ff = fitxer.parse_fan_file(path)
        informe.afegeix_entrada(path.read_text(encoding="utf-8"))
        f = ff.to_fan()
        files.append({
            "fitxer": path.name,
            "nom": ff.name,
            "rang": ff.rank,
            "raigs": len(ff.rays),
            "cons": len(ff.maximal_cones),
            "complet": f.complete.value,
            "census": ",".join(str(x) for x in f.census()),
        })
    informe.afegeix_taula("cataleg", pd.DataFrame(files))
    informe.afegeix_resultat("census", "fitxers", len(files))


def construeix_analitzador() -> Analitzador:
    comuns = Analitzador(add_help=False)
    comuns.add_argument("--format", choices=("text", "json"), default="text")
    comuns.add_argument("--log-level", choices=("DEBUG", "INFO", "WARNING", "ERROR"), default="WARNING")

    amb_cos = Analitzador(add_help=False)
    amb_cos.add_argument("--field", help="algclosed0 | fq:<q> | symbolic")

    amb_graus = Analitzador(add_help=False)
    amb_graus.add_argument("--degree", type=_enters, default=[0], help="graus separats per comes")

    amb_fitxer = Analitzador(add_help=False)
    amb_fitxer.add_argument("fitxer", nargs="?", help="fitxer de ventall")
    amb_fitxer.add_argument("--json", action="store_true", help="el fitxer és el mirall JSON")

    amb_raigs = Analitzador(add_help=False)
    amb_raigs.add_argument("--rays", help="raigs separats per punt i coma, p. ex. 1,0;7,5")

    analitzador = Analitzador(prog="torica", description="G-teoria, nombres de Betti i grups de Chow de varietats tòriques")
    subordres = analitzador.add_subparsers(dest="ordre", required=True)

    p = subordres.add_parser("normalize", parents=[comuns, amb_fitxer, amb_raigs])
    p.set_defaults(funcio=_normalize)

    gt = subordres.add_parser("gtheory").add_subparsers(dest="varietat", required=True)
    p = gt.add_parser("affine-surface", parents=[comuns, amb_cos, amb_graus, amb_fitxer, amb_raigs])
    p.add_argument("--m", type=int)
    p.set_defaults(funcio=_gtheory_superficie)
    p = gt.add_parser("wps", parents=[comuns, amb_cos, amb_graus])
    p.add_argument("--weights", type=_enters, required=True)
    p.add_argument("--trace", action="store_true")
    p.set_defaults(funcio=_gtheory_wps)
    p = gt.add_parser("resolution", parents=[comuns, amb_cos, amb_graus])
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--trace", action="store_true")
    p.set_defaults(funcio=_gtheory_resolucio)
    p = gt.add_parser("product", parents=[comuns, amb_cos, amb_graus])
    p.add_argument("--x", type=_enters, required=True)
    p.add_argument("--y", type=_enters, required=True)
    p.set_defaults(funcio=_gtheory_producte)

    p = subordres.add_parser("betti", parents=[comuns, amb_fitxer])
    p.add_argument("--weights", type=_enters)
    p.set_defaults(funcio=_betti)

    p = subordres.add_parser("semigroup", parents=[comuns, amb_fitxer])
    p.add_argument("--a", type=int)
    p.add_argument("--b", type=int)
    p.add_argument("--m", type=int)
    p.set_defaults(funcio=_semigroup)

    p = subordres.add_parser("chow", parents=[comuns, amb_fitxer, amb_raigs])
    p.add_argument("--rank", type=int, help="sense --rays: con zero de Z^rank")
    p.set_defaults(funcio=_chow)

    p = subordres.add_parser("verify", parents=[comuns, amb_fitxer])
    p.add_argument("--catalog", nargs="?", const=str(CATALEG), help="directori de fitxers .fan")
    p.add_argument("--weights", type=_enters)
    p.add_argument("--mutate", choices=verifica.MUTACIONS)
    p.set_defaults(funcio=_verify)

    p = subordres.add_parser("catalog", parents=[comuns])
    p.add_argument("directori", nargs="?", default=str(CATALEG))
    p.set_defaults(funcio=_catalog)

    return analitzador


def run_command(argv: list[str]) -> tuple[Informe | None, int]:
    """Executa una ordre.

    Retorna:
        Parella ``(informe, codi)``. Si l'entrada és incorrecta l'informe és ``None``, el codi
        és 1 i l'error queda registrat a stderr.
    """
    try:
        args = construeix_analitzador().parse_args(argv)
        configura_registre(args.log_level)
        informe = Informe(argv, format_=args.format)
        args.funcio(args, informe)
    except ErrorToric as e:
        logging.error(e.message)
        return None, 1
    except ValueError as e:
        logging.error(str(e))
        return None, 1

    return informe, informe.codi_sortida
