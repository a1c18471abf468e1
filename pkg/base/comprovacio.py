# -*- coding: utf-8 -*-
""" Mòdul que conté les classes abstractes per a les comprovacions contra oracles.

Una comprovació rep una entrada (un ventall, un con, uns pesos...) i la confronta amb una
computació independent. El verificador recorre les entrades i passa cada una a totes les
comprovacions aplicables, de la mateixa manera que un joc demana una acció a cada agent.
"""
import abc
import dataclasses
import logging

from tqdm import tqdm


class Entrada:
    def __init__(self, dades: dict[str, object], nom: str = ""):
        self.__dades = dades
        self.nom = nom

    def __getitem__(self, key):
        return self.__dades[key]

    def __contains__(self, key) -> bool:
        return key in self.__dades

    def to_dict(self):
        return self.__dades


@dataclasses.dataclass(frozen=True)
class Veredicte:
    """Resultat d'una comprovació creuada concreta."""

    comprovacio: str
    entrada: str
    operacions: tuple[str, ...]
    esperat: object
    obtingut: object
    passa: bool

    def to_dict(self) -> dict:
        return {
            "comprovacio": self.comprovacio,
            "entrada": self.entrada,
            "operacions": list(self.operacions),
            "esperat": str(self.esperat),
            "obtingut": str(self.obtingut),
            "passa": self.passa,
        }


class Comprovacio(abc.ABC):
    """Comprovació creuada entre una fórmula tancada i un oracle independent.

    Args:
        nom: Identificador estable de la comprovació.
        mutacio: Si s'indica, nom de la constant de fórmula tancada que s'ha de pertorbar en
            una unitat (per confirmar que el verificador detecta errors).
    """

    def __init__(self, nom: str, mutacio: str | None = None) -> None:
        self.nom = nom
        self._mutacio = mutacio

    def _desviacio(self, constant: str) -> int:
        return 1 if self._mutacio == constant else 0

    def _veredicte(
        self, entrada: Entrada, operacions: tuple[str, ...], esperat, obtingut
    ) -> Veredicte:
        passa = esperat == obtingut
        if not passa:
            logging.warning(
                "%s ha fallat sobre %s: esperat %s, obtingut %s",
                self.nom, entrada.nom, esperat, obtingut,
            )
        return Veredicte(
            comprovacio=self.nom,
            entrada=entrada.nom,
            operacions=operacions,
            esperat=esperat,
            obtingut=obtingut,
            passa=passa,
        )

    @abc.abstractmethod
    def aplicable(self, entrada: Entrada) -> bool:
        raise NotImplementedError

    @abc.abstractmethod
    def comprova(self, entrada: Entrada) -> list[Veredicte]:
        raise NotImplementedError


class Verificador:
    def __init__(self, comprovacions: list[Comprovacio], mostra_progres: bool = False):
        self._comprovacions = comprovacions
        self.__mostra_progres = mostra_progres
        self.__veredictes: list[Veredicte] = []

    def comencar(self, entrades: list[Entrada]) -> list[Veredicte]:
        for entrada in tqdm(entrades, disable=not self.__mostra_progres, desc="verificant"):
            self._logica(entrada)
        logging.info(
            "Verificació acabada: %d comprovacions, %d fallades",
            len(self.__veredictes),
            len(self.fallades),
        )
        return list(self.__veredictes)

    def _logica(self, entrada: Entrada) -> None:
        for c in self._comprovacions:
            if c.aplicable(entrada):
                self.__veredictes.extend(c.comprova(entrada))

    @property
    def fallades(self) -> list[Veredicte]:
        return [v for v in self.__veredictes if not v.passa]

    @property
    def passa(self) -> bool:
        return not self.fallades
