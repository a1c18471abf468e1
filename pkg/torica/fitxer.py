# -*- coding: utf-8 -*-
""" Lectura i escriptura dels fitxers de ventall.

Format de línies (``#`` comença un comentari)::

    name P^2
    rank 2
    complete true
    ray 1 0
    ray 0 1
    ray -1 -1
    cone 0 1
    cone 1 2
    cone 0 2

També s'accepta un mirall JSON amb els camps ``name``, ``rank``, ``rays``, ``maximal_cones`` i
``flags``.
"""
import dataclasses
import json
import logging
import pathlib

from base import reticle
from base.reticle import ErrorToric
from cons import con, ventall


class ErrorFitxer(ErrorToric):
    codi = "FILE"

    def __init__(self, origen: str, linia: int, msg: str) -> None:
        self.origen = origen
        self.linia = linia
        super().__init__(f"[{self.codi}] {origen}:{linia}: {msg}")


class ErrorSintaxi(ErrorFitxer):
    codi = "SYNTAX"

    def __init__(self, origen: str, linia: int, columna: int, msg: str) -> None:
        self.columna = columna
        super().__init__(origen, linia, f"columna {columna}: {msg}")


class ErrorDimensio(ErrorFitxer):
    codi = "DIMENSION"


class IndexIncorrecte(ErrorFitxer):
    codi = "BAD_INDEX"


FLAGS = ("complete", "simplicial")
_BOOLEANS = {"true": True, "false": False}


@dataclasses.dataclass(frozen=True)
class FanFile:
    rank: int
    rays: tuple[tuple[int, ...], ...]
    maximal_cones: tuple[tuple[int, ...], ...]
    flags: dict = dataclasses.field(default_factory=dict)
    name: str = ""
    avisos: tuple[str, ...] = ()

    def to_fan(self) -> ventall.Fan:
        if self.flags.get("simplicial") is False:
            raise ventall.VentallInvalid(f"{self.name or 'el ventall'} es declara no simplicial")
        return ventall.Fan(
            self.rank,
            self.rays,
            self.maximal_cones,
            complete=self.flags.get("complete"),
            name=self.name,
        )

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "rank": self.rank,
            "rays": [list(r) for r in self.rays],
            "maximal_cones": [list(c) for c in self.maximal_cones],
            "flags": {k: self.flags[k] for k in FLAGS if k in self.flags},
        }


def _enter(origen: str, linia: int, columna: int, text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise ErrorSintaxi(origen, linia, columna, f"'{text}' no és un enter") from None


def _es_enter(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


def _primitiu(raig: tuple[int, ...], avisos: list[str]) -> tuple[int, ...]:
    prim = tuple(int(x) for x in reticle.primitive(raig))
    if prim != raig:
        avis = f"raig {con.format_vector(raig)} normalitzat a {con.format_vector(prim)}"
        logging.warning(avis)
        avisos.append(avis)
    return prim


def _construeix(origen, rank, rays, cones, flags, name) -> FanFile:
    """Valida dimensions i índexs i normalitza els raigs a primitius.

    ``rays`` i ``cones`` són llistes de parelles ``(línia, valors)``.
    """
    if not _es_enter(rank) or rank < 1:
        raise ErrorDimensio(origen, 0, f"el rang {rank} ha de ser un enter >= 1")

    avisos = []
    raigs = []
    for linia, raig in rays:
        raig = tuple(raig)
        if len(raig) != rank:
            raise ErrorDimensio(origen, linia, f"el raig {con.format_vector(raig)} no té rang {rank}")
        if not any(raig):
            raise ErrorDimensio(origen, linia, "el vector nul no és un raig")
        prim = _primitiu(raig, avisos)
        if prim in raigs:
            raise ErrorDimensio(
                origen, linia, f"el raig {con.format_vector(raig)} repeteix el raig {raigs.index(prim)}"
            )
        raigs.append(prim)

    maximals = []
    for linia, indexs in cones:
        for i in indexs:
            if not 0 <= i < len(raigs):
                raise IndexIncorrecte(origen, linia, f"índex {i} fora de rang: hi ha {len(raigs)} raigs")
        if len(set(indexs)) != len(indexs):
            raise IndexIncorrecte(origen, linia, f"índexs repetits a {list(indexs)}")
        maximals.append(tuple(sorted(indexs)))

    return FanFile(
        rank=rank,
        rays=tuple(raigs),
        maximal_cones=tuple(maximals),
        flags=dict(flags),
        name=name,
        avisos=tuple(avisos),
    )


def parse_fan_text(text: str, origen: str = "<text>") -> FanFile:
    rank = None
    name = ""
    flags = {}
    rays = []
    cones = []

    for linia, contingut in enumerate(text.splitlines(), start=1):
        contingut = contingut.split("#", 1)[0]
        if not contingut.strip():
            continue
        paraules = contingut.split()
        columnes = []
        posicio = 0
        for p in paraules:
            posicio = contingut.index(p, posicio)
            columnes.append(posicio + 1)
            posicio += len(p)
        clau, args, cols = paraules[0], paraules[1:], columnes[1:]

        if clau == "name":
            name = contingut.strip()[len("name"):].strip()
        elif clau == "rank":
            if rank is not None:
                raise ErrorSintaxi(origen, linia, columnes[0], "capçalera rank repetida")
            if len(args) != 1:
                raise ErrorSintaxi(origen, linia, columnes[0], "rank espera un únic enter")
            rank = _enter(origen, linia, cols[0], args[0])
        elif clau in FLAGS:
            if len(args) != 1 or args[0] not in _BOOLEANS:
                raise ErrorSintaxi(origen, linia, columnes[0], f"{clau} espera true o false")
            flags[clau] = _BOOLEANS[args[0]]
        elif clau in ("ray", "cone"):
            if rank is None:
                raise ErrorSintaxi(origen, linia, columnes[0], f"{clau} abans de la capçalera rank")
            valors = tuple(_enter(origen, linia, c, a) for a, c in zip(args, cols))
            if clau == "ray":
                rays.append((linia, valors))
            else:
                cones.append((linia, valors))
        else:
            raise ErrorSintaxi(origen, linia, columnes[0], f"paraula clau desconeguda '{clau}'")

    if rank is None:
        raise ErrorSintaxi(origen, 1, 1, "falta la capçalera rank")
    return _construeix(origen, rank, rays, cones, flags, name)


def parse_fan_json(text: str, origen: str = "<json>") -> FanFile:
    try:
        dades = json.loads(text)
    except json.JSONDecodeError as e:
        raise ErrorSintaxi(origen, e.lineno, e.colno, e.msg) from None
    if not isinstance(dades, dict) or "rank" not in dades:
        raise ErrorSintaxi(origen, 1, 1, "cal un objecte amb el camp rank")

    flags = dades.get("flags", {})
    if not isinstance(flags, dict) or any(k not in FLAGS or not isinstance(v, bool) for k, v in flags.items()):
        raise ErrorSintaxi(origen, 1, 1, f"flags invàlids: {flags}")
    if not _es_enter(dades["rank"]):
        raise ErrorSintaxi(origen, 1, 1, f"el rang {dades['rank']!r} no és un enter")

    def llistes(camp):
        valors = dades.get(camp, [])
        if not isinstance(valors, list) or not all(
            isinstance(v, list) and all(_es_enter(x) for x in v) for v in valors
        ):
            raise ErrorSintaxi(origen, 1, 1, f"{camp} ha de ser una llista de llistes d'enters")
        return [(0, tuple(v)) for v in valors]

    return _construeix(
        origen, dades["rank"], llistes("rays"), llistes("maximal_cones"), flags, str(dades.get("name", ""))
    )


def parse_fan_file(path, json_mirror: bool = False) -> FanFile:
    """Llegeix i valida un fitxer de ventall.

    Args:
        path: Camí al fitxer.
        json_mirror: Si és cert, el fitxer és el mirall JSON.
    Llança:
        ErrorSintaxi, ErrorDimensio o IndexIncorrecte, cadascun amb el seu codi.
    """
    path = pathlib.Path(path)
    text = path.read_text(encoding="utf-8")
    if json_mirror:
        return parse_fan_json(text, origen=str(path))
    return parse_fan_text(text, origen=str(path))


def emit_fan_file(ff: FanFile) -> str:
    """Forma canònica del fitxer: ``parse_fan_text(emit_fan_file(ff))`` retorna ``ff``."""
    linies = []
    if ff.name:
        linies.append(f"name {ff.name}")
    linies.append(f"rank {ff.rank}")
    for clau in FLAGS:
        if clau in ff.flags:
            linies.append(f"{clau} {'true' if ff.flags[clau] else 'false'}")
    for raig in ff.rays:
        linies.append("ray " + " ".join(str(x) for x in raig))
    for indexs in ff.maximal_cones:
        linies.append("cone " + " ".join(str(i) for i in indexs))
    return "\n".join(linies) + "\n"
