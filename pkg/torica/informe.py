# -*- coding: utf-8 -*-
""" Informe d'una execució: eco de l'ordre, resum de l'entrada, resultats, comprovacions,
traces i avisos. La sortida, en text o en JSON, és determinista.
"""
import hashlib
import json

import pandas as pd

from base.comprovacio import Veredicte


def _valor(v):
    if hasattr(v, "to_dict"):
        return v.to_dict()
    if isinstance(v, (list, tuple)):
        return [_valor(x) for x in v]
    return v


def _text(v) -> str:
    if hasattr(v, "pretty"):
        return v.pretty()
    if isinstance(v, (list, tuple)):
        return ", ".join(_text(x) for x in v)
    return str(v)


class Informe:
    """Acumula el que produeix una ordre.

    Args:
        ordre: Arguments de la línia d'ordres, sense el nom del programa.
        format_: ``text`` o ``json``.
    """

    def __init__(self, ordre: list[str], format_: str = "text"):
        self.ordre = list(ordre)
        self.format = format_
        self.__entrades = hashlib.sha256()
        self.__hi_ha_entrada = False
        self.resultats: list[dict] = []
        self.taules: list[tuple[str, pd.DataFrame]] = []
        self.veredictes: list[Veredicte] = []
        self.traces: list[tuple[str, list]] = []
        self.avisos: list[str] = []

    def afegeix_entrada(self, contingut: str | bytes) -> None:
        if isinstance(contingut, str):
            contingut = contingut.encode("utf-8")
        self.__entrades.update(contingut)
        self.__hi_ha_entrada = True

    @property
    def digest(self) -> str:
        h = self.__entrades.copy()
        if not self.__hi_ha_entrada:
            h.update(" ".join(self.ordre).encode("utf-8"))
        return "sha256:" + h.hexdigest()

    def afegeix_resultat(self, operacio: str, clau: str, valor, convencio: str | None = None) -> None:
        """Tot resultat numèric porta el nom de l'operació que l'ha produït."""
        resultat = {"operation": operacio, "key": clau, "value": valor}
        if convencio is not None:
            resultat["convention"] = convencio
        self.resultats.append(resultat)

    def afegeix_taula(self, nom: str, taula: pd.DataFrame) -> None:
        self.taules.append((nom, taula))

    def afegeix_veredictes(self, veredictes: list[Veredicte]) -> None:
        self.veredictes.extend(veredictes)

    def afegeix_traca(self, operacio: str, passos) -> None:
        self.traces.append((operacio, list(passos)))

    def afegeix_avisos(self, avisos) -> None:
        for a in avisos:
            if a not in self.avisos:
                self.avisos.append(a)

    @property
    def codi_sortida(self) -> int:
        return 2 if any(not v.passa for v in self.veredictes) else 0

    def to_dict(self) -> dict:
        return {
            "command": self.ordre,
            "input_digest": self.digest,
            "results": [
                {**r, "value": _valor(r["value"])} for r in self.resultats
            ],
            "tables": {
                nom: taula.to_dict(orient="records") for nom, taula in self.taules
            },
            "checks": [v.to_dict() for v in self.veredictes],
            "traces": {op: [_valor(p) for p in passos] for op, passos in self.traces},
            "warnings": list(self.avisos),
            "exit_code": self.codi_sortida,
        }

    def json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, ensure_ascii=False, indent=2)

    def text(self) -> str:
        linies = [
            "ordre: " + " ".join(self.ordre),
            "entrada: " + self.digest,
        ]
        if self.resultats:
            linies.append("resultats:")
            for r in self.resultats:
                convencio = f" ({r['convention']})" if "convention" in r else ""
                linies.append(f"  [{r['operation']}] {r['key']}{convencio}: {_text(r['value'])}")
        for nom, taula in self.taules:
            linies.append(f"taula {nom}:")
            linies.extend("  " + l for l in taula.to_string(index=False).splitlines())
        if self.veredictes:
            linies.append("comprovacions:")
            for v in self.veredictes:
                marca = "PASS" if v.passa else "FAIL"
                linies.append(
                    f"  [{marca}] {v.comprovacio} ({v.entrada}): esperat {v.esperat}, "
                    f"obtingut {v.obtingut} [{', '.join(v.operacions)}]"
                )
            fallades = sum(1 for v in self.veredictes if not v.passa)
            linies.append(f"  total: {len(self.veredictes)}, fallades: {fallades}")
        for operacio, passos in self.traces:
            linies.append(f"traça [{operacio}]:")
            linies.extend(f"  {p}" for p in passos)
        if self.avisos:
            linies.append("avisos:")
            linies.extend(f"  - {a}" for a in self.avisos)
        return "\n".join(linies) + "\n"

    def render(self) -> str:
        return self.json() + "\n" if self.format == "json" else self.text()
