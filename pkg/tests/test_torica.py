import dataclasses
import json

import pytest

from cons.ventall import VentallInvalid
from torica import fitxer
from torica.__main__ import main
from torica.fitxer import ErrorDimensio, ErrorSintaxi, IndexIncorrecte
from torica.ordres import run_command

P2 = "name P^2\nrank 2\ncomplete true\nray 1 0\nray 0 1\nray -1 -1\ncone 0 1\ncone 0 2\ncone 1 2\n"


def _valors(informe, operacio):
    return [r["value"] for r in informe.resultats if r["operation"] == operacio]


class TestFitxer:
    def test_p2(self):
        ff = fitxer.parse_fan_text(P2)
        assert ff.name == "P^2"
        assert len(ff.rays) == 3 and len(ff.maximal_cones) == 3
        assert ff.flags == {"complete": True}
        assert ff.to_fan().census() == [1, 3, 3]

    def test_comentaris(self):
        ff = fitxer.parse_fan_text("# capçalera\nrank 1  # rang\nray 1\nray -1\ncone 0\ncone 1\n")
        assert ff.rays == ((1,), (-1,))

    def test_raig_no_primitiu(self):
        ff = fitxer.parse_fan_text("rank 2\nray 2 4\nray 1 0\ncone 0 1\n")
        assert ff.rays == ((1, 2), (1, 0))
        assert ff.avisos == ("raig (2,4) normalitzat a (1,2)",)

    def test_error_sintaxi(self):
        with pytest.raises(ErrorSintaxi) as e:
            fitxer.parse_fan_text("rank 2\nray 1 x\n")
        assert (e.value.linia, e.value.columna) == (2, 7)
        assert e.value.codi == "SYNTAX"

    @pytest.mark.parametrize(
        "text",
        ["ray 1 0\nrank 2\n", "ray 1 0\n", "rank 2\nrank 2\n", "rank 2\ncomplete maybe\n", "rank 2\nfoo 1\n"],
    )
    def test_altres_errors_sintaxi(self, text):
        with pytest.raises(ErrorSintaxi):
            fitxer.parse_fan_text(text)

    def test_error_dimensio(self):
        with pytest.raises(ErrorDimensio) as e:
            fitxer.parse_fan_text("rank 2\nray 1 0 0\n")
        assert e.value.linia == 2
        assert e.value.codi == "DIMENSION"

    def test_vector_nul(self):
        with pytest.raises(ErrorDimensio):
            fitxer.parse_fan_text("rank 2\nray 0 0\n")

    def test_index_incorrecte(self):
        with pytest.raises(IndexIncorrecte) as e:
            fitxer.parse_fan_text("rank 2\nray 1 0\nray 0 1\ncone 0 5\n")
        assert e.value.linia == 4
        assert e.value.codi == "BAD_INDEX"

    def test_raig_repetit(self):
        with pytest.raises(ErrorDimensio) as e:
            fitxer.parse_fan_text("rank 2\nray 1 0\nray 0 1\nray 2 0\ncone 0 1\ncone 1 2\n")
        assert e.value.linia == 4
        with pytest.raises(ErrorDimensio):
            fitxer.parse_fan_json('{"rank": 2, "rays": [[1, 0], [3, 0]]}')

    def test_index_repetit(self):
        with pytest.raises(IndexIncorrecte):
            fitxer.parse_fan_text("rank 2\nray 1 0\nray 0 1\ncone 1 1\n")

    def test_emissio_canonica(self):
        assert fitxer.emit_fan_file(fitxer.parse_fan_text(P2)) == P2

    def test_anada_i_tornada_cataleg(self, cataleg):
        for path in sorted(cataleg.glob("*.fan")):
            ff = fitxer.parse_fan_file(path)
            tornada = fitxer.parse_fan_text(fitxer.emit_fan_file(ff))
            assert tornada == dataclasses.replace(ff, avisos=())

    def test_mirall_json(self, cataleg):
        ff = fitxer.parse_fan_file(cataleg / "p112.fan")
        assert fitxer.parse_fan_json(json.dumps(ff.to_dict())) == ff

    def test_fitxer_json(self, tmp_path):
        path = tmp_path / "p2.json"
        path.write_text(json.dumps(fitxer.parse_fan_text(P2).to_dict()), encoding="utf-8")
        assert fitxer.parse_fan_file(path, json_mirror=True).name == "P^2"

    @pytest.mark.parametrize(
        "text",
        [
            "{",
            "[]",
            '{"rank": 2, "flags": {"smooth": true}}',
            '{"rank": 2, "flags": [true]}',
            '{"rank": 2, "rays": [["a", 1]]}',
            '{"rank": 2, "rays": [[1.9, 0.5], "01"]}',
            '{"rank": 2, "rays": [[1, 0], "01"]}',
            '{"rank": 2, "rays": [[true, 0]]}',
            '{"rank": 2, "rays": {"0": [1, 0]}}',
            '{"rank": 2, "rays": [[1, 0], [0, 1]], "maximal_cones": [[0, 1.0]]}',
            '{"rank": 2, "rays": [[1, 0], [0, 1]], "maximal_cones": ["01"]}',
            '{"rank": true, "rays": [[1]]}',
            '{"rank": 2.0}',
            '{"rank": "2"}',
        ],
    )
    def test_json_invalid(self, text):
        with pytest.raises(ErrorSintaxi):
            fitxer.parse_fan_json(text)

    def test_declarat_no_simplicial(self):
        ff = fitxer.parse_fan_text("rank 2\nsimplicial false\nray 1 0\nray 0 1\ncone 0 1\n")
        with pytest.raises(VentallInvalid):
            ff.to_fan()


class TestOrdres:
    def test_wps(self):
        informe, codi = run_command(["gtheory", "wps", "--weights", "1,1,2", "--degree", "0"])
        assert codi == 0
        assert "Z^3" in informe.text()

    def test_wps_traca(self):
        informe, codi = run_command(["gtheory", "wps", "--weights", "1,1,2", "--degree", "1", "--trace"])
        assert codi == 0
        assert len(informe.traces) == 1
        assert "G_1(k)^3" in informe.text()

    def test_producte(self):
        informe, codi = run_command(
            ["gtheory", "product", "--x", "1,1", "--y", "1,1", "--degree", "1", "--field", "fq:5"]
        )
        assert codi == 0
        assert "(Z/4)^8" in informe.text()

    def test_superficie(self):
        informe, codi = run_command(["gtheory", "affine-surface", "--rays", "1,0;2,5", "--degree", "0,1"])
        assert codi == 0
        text = informe.text()
        assert "Z ⊕ Z/5" in text
        assert "sigma^dual" in text

    def test_superficie_monomial(self):
        informe, codi = run_command(["gtheory", "affine-surface", "--m", "4"])
        assert codi == 0
        assert "Z ⊕ Z/4" in informe.text()

    def test_superficie_cos_finit(self):
        informe, codi = run_command(["gtheory", "affine-surface", "--rays", "1,0;2,5", "--field", "fq:5"])
        assert (informe, codi) == (None, 1)

    def test_resolucio(self):
        informe, codi = run_command(["gtheory", "resolution", "--d", "3", "--degree", "1", "--trace"])
        assert codi == 0
        assert _valors(informe, "resolution_gtheory")[0].pretty() == "G_1(k)^2"
        assert len(informe.traces[0][1]) == 5

    def test_betti_fitxer(self, cataleg):
        informe, codi = run_command(["betti", str(cataleg / "p2.fan")])
        assert codi == 0
        assert _valors(informe, "betti_even") == [[1, 1, 1]]
        assert _valors(informe, "g0_rational_dim") == [3]

    def test_betti_pesos(self):
        informe, codi = run_command(["betti", "--weights", "1,1,2"])
        assert codi == 0
        assert _valors(informe, "census") == [[1, 3, 3]]

    def test_betti_incomplet(self, cataleg):
        assert run_command(["betti", str(cataleg / "resolucio_2.fan")]) == (None, 1)

    def test_normalize(self):
        informe, codi = run_command(["normalize", "--rays", "1,0;7,5"])
        assert codi == 0
        assert "Singular(2,5)" in informe.text()

    def test_semigrup(self):
        informe, codi = run_command(["semigroup", "--a", "2", "--b", "5"])
        assert codi == 0
        rangs = [r["value"] for r in informe.resultats if r["key"] == "rank a=2 b=5"]
        assert rangs == [5]
        assert _valors(informe, "floor_sum_identity") == [5]

    def test_semigrup_m(self):
        informe, codi = run_command(["semigroup", "--m", "3"])
        assert codi == 0
        assert _valors(informe, "nilradical_relation") == [
            {"exponent": [3, 3], "in_xR": True},
            {"exponent": [3, 6], "in_xR": True},
            {"exponent": [3, 9], "in_xR": False},
        ]

    def test_chow_con_zero(self):
        informe, codi = run_command(["chow", "--rank", "2"])
        assert codi == 0
        assert _valors(informe, "conjecture_check")[0].to_dict()["status"] == "Trivial"

    def test_chow_fora_d_abast(self):
        informe, codi = run_command(["chow", "--rays", "1,0,0;0,1,0;1,1,2"])
        assert codi == 0
        assert "OutOfScope" in informe.text()
        assert _valors(informe, "class_group_affine")[0].torsion == (2,)
        assert not _valors(informe, "a2_smooth_affine")

    def test_verify_cataleg(self):
        informe, codi = run_command(["verify", "--catalog"])
        assert codi == 0
        assert informe.veredictes
        assert all(v.passa for v in informe.veredictes)

    @pytest.mark.parametrize("mutacio", ["delta", "rank", "betti"])
    def test_verify_mutacio(self, mutacio):
        informe, codi = run_command(["verify", "--catalog", "--mutate", mutacio])
        assert codi == 2
        assert any(not v.passa for v in informe.veredictes)
        assert "[FAIL]" in informe.text()

    def test_verify_pesos(self):
        informe, codi = run_command(["verify", "--weights", "1,2,3"])
        assert codi == 0

    def test_verify_fitxer_incorrecte(self, tmp_path):
        path = tmp_path / "dolent.fan"
        path.write_text("rank 2\nray 1 x\n", encoding="utf-8")
        assert run_command(["verify", str(path)]) == (None, 1)

    @pytest.mark.parametrize(
        "argv",
        [
            ["betti", "no_existeix.fan"],
            ["gtheory", "wps", "--weights", "2,4"],
            ["gtheory", "product", "--x", "1,1", "--y", "1,1", "--degree", "3"],
            ["gtheory", "wps", "--weights", "1,1", "--degree", "a"],
            ["normalize", "--rays", ";"],
            ["chow", "--rays", " ; "],
            ["desconeguda"],
            [],
        ],
    )
    def test_entrada_incorrecta(self, argv):
        assert run_command(argv) == (None, 1)

    def test_json_determinista(self):
        argv = ["gtheory", "wps", "--weights", "1,1,2", "--degree", "0,1", "--trace", "--format", "json"]
        primer, _ = run_command(argv)
        segon, _ = run_command(argv)
        assert primer.render() == segon.render()
        dades = json.loads(primer.render())
        assert dades["exit_code"] == 0
        assert dades["input_digest"].startswith("sha256:")
        assert dades["results"][0]["value"]["pretty"] == "Z^3"

    def test_json_cataleg(self, cataleg):
        informe, codi = run_command(["catalog", "--format", "json"])
        assert codi == 0
        dades = json.loads(informe.render())
        assert len(dades["tables"]["cataleg"]) == len(list(cataleg.glob("*.fan")))

    def test_main(self, monkeypatch, capsys):
        monkeypatch.setattr("sys.argv", ["torica", "gtheory", "wps", "--weights", "1,1"])
        with pytest.raises(SystemExit) as e:
            main()
        assert e.value.code == 0
        assert "Z^2" in capsys.readouterr().out
