import math

import pytest
from sympy import Matrix, ZZ, factorint
from sympy.matrices.normalforms import smith_normal_form as snf_sympy

from chow import classe
from cons import con, superficie, ventall
from cons.con import Cone
from cons.ventall import VentallInvalid
from gteoria import cos, grup, teoremes
from gteoria.cos import CosInvalid, FieldModel, HipotesiViolada
from gteoria.grup import GK, GroupExpr, ModTensorGK, TensorGK
from gteoria.teoremes import GrauNoSuportat
from semigrup.punt import ParametresInvalids
from torica import fitxer

ALG = FieldModel.alg_closed_char0()
SIMB = FieldModel.symbolic()
ESPAIS_KUNNETH = [(1, 1), (1, 1, 1), (1, 1, 2)]


def _fq(q):
    return FieldModel.finite_field(q)


def _tensor_per_presentacio(ordres_a, ordres_b) -> GroupExpr:
    """Producte tensorial de dos grups finits calculat com el conucli de la seva presentació."""
    parelles = [(x, y) for x in ordres_a for y in ordres_b]
    files = []
    for k, (x, y) in enumerate(parelles):
        for ordre in (x, y):
            fila = [0] * len(parelles)
            fila[k] = ordre
            files.append(fila)
    snf = snf_sympy(Matrix(files), domain=ZZ)
    diagonal = [abs(int(snf[i, i])) for i in range(len(parelles))]
    return grup.canonicalize(GroupExpr(torsion=tuple(diagonal)))


class TestCanonicalitzacio:
    def test_cadena(self):
        g = grup.canonicalize(GroupExpr(torsion=(2, 3)))
        assert g.torsion == (6,)

    def test_cadena_no_trivial(self):
        assert grup.canonicalize(GroupExpr(torsion=(4, 6))).torsion == (2, 12)

    def test_z0_z1(self):
        g = grup.canonicalize(GroupExpr(torsion=(0, 1, 5)))
        assert g.free_rank == 1
        assert g.torsion == (5,)

    def test_g0_es_z(self):
        g = grup.canonicalize(GroupExpr(free_rank=1, symbolic=((GK(0), 2),)))
        assert g == GroupExpr.lliure(3)

    def test_tensor_amb_g0(self):
        g = grup.canonicalize(GroupExpr(symbolic=((TensorGK(2, 0), 3),)))
        assert g == GroupExpr.gk(2, 3)

    def test_mod_tensor(self):
        g = grup.canonicalize(GroupExpr(symbolic=((ModTensorGK(12, 1), 1),)))
        assert g.termes() == {ModTensorGK(12, 1): 1}
        assert grup.canonicalize(GroupExpr(symbolic=((ModTensorGK(6, 0), 2),))).torsion == (6, 6)

    def test_mod_tensor_cadena(self):
        g = GroupExpr(symbolic=((ModTensorGK(4, 1), 1), (ModTensorGK(3, 1), 1), (ModTensorGK(6, 2), 2)))
        c = grup.canonicalize(g)
        assert c.termes() == {ModTensorGK(12, 1): 1, ModTensorGK(6, 2): 2}
        g = GroupExpr(symbolic=((ModTensorGK(4, 1), 1), (ModTensorGK(6, 1), 1), (ModTensorGK(1, 1), 3)))
        assert grup.canonicalize(g).termes() == {ModTensorGK(2, 1): 1, ModTensorGK(12, 1): 1}

    def test_cadena_divisors_elementals(self, rng):
        def elementals(ordres):
            return sorted(p**e for d in ordres for p, e in factorint(d).items())

        for _ in range(40):
            ordres = [rng.randint(1, 60) for _ in range(rng.randint(1, 5))]
            cadena = grup.canonicalize(GroupExpr(torsion=tuple(ordres))).torsion
            assert all(y % x == 0 for x, y in zip(cadena, cadena[1:]))
            assert elementals(cadena) == elementals(ordres)

    def test_ordre_semiprimer_gran(self):
        # producte de dos primers de Mersenne
        n = (2**127 - 1) * (2**521 - 1)
        g = grup.canonicalize(GroupExpr(torsion=(n, n, 2**127 - 1)))
        assert g.torsion == (2**127 - 1, n, n)
        assert GroupExpr.ciclic(2**127 - 1) + GroupExpr.ciclic(2**521 - 1) == GroupExpr.ciclic(n)

    def test_idempotent(self):
        g = GroupExpr(free_rank=2, torsion=(4, 6, 1), symbolic=((GK(3), 1), (GK(1), 2), (GK(3), 1)))
        c = grup.canonicalize(g)
        assert grup.canonicalize(c) == c
        assert c.termes() == {GK(1): 2, GK(3): 2}

    def test_pretty(self):
        g = GroupExpr.lliure(3) + GroupExpr.ciclic(5) + GroupExpr.ciclic(5) + GroupExpr.gk(1, 2)
        assert g.pretty() == "Z^3 ⊕ (Z/5)^2 ⊕ G_1(k)^2"
        assert str(GroupExpr.zero()) == "0"
        assert str(GroupExpr.ciclic(1)) == "0"
        assert str(GroupExpr.ciclic(0)) == "Z"

    def test_gk_negatiu(self):
        with pytest.raises(ValueError):
            GK(-1)


class TestCos:
    @pytest.mark.parametrize(
        "j,q,esperat",
        [(0, 5, GroupExpr.lliure(1)), (1, 5, GroupExpr.ciclic(4)), (2, 5, GroupExpr.zero()), (3, 2, GroupExpr.ciclic(3))],
    )
    def test_avalua_finit(self, j, q, esperat):
        assert cos.evaluate(GroupExpr.gk(j), _fq(q)) == esperat

    def test_avalua_simbolic(self):
        g = GroupExpr.gk(1, 2) + GroupExpr.ciclic(3)
        assert cos.evaluate(g, SIMB) == g
        assert cos.evaluate(g, ALG) == g

    def test_avalua_idempotent(self):
        g = GroupExpr(symbolic=((TensorGK(1, 1), 2), (ModTensorGK(4, 3), 1)))
        f = _fq(3)
        assert cos.evaluate(cos.evaluate(g, f), f) == cos.evaluate(g, f)

    @pytest.mark.parametrize("text", ["fq:6", "fq:1", "fq:x", "complex", "symbolic:2"])
    def test_parse_invalid(self, text):
        with pytest.raises(CosInvalid):
            FieldModel.parse(text)

    @pytest.mark.parametrize("text", ["algclosed0", "symbolic", "fq:5", "fq:8"])
    def test_parse(self, text):
        assert str(FieldModel.parse(text)) == text

    def test_divisibilitat(self):
        assert cos.is_divisible(GK(2), ALG)
        assert cos.is_uniquely_divisible(GK(2), ALG)
        assert not cos.has_QmodZ_summand(GK(2), ALG)
        assert cos.is_divisible(GK(1), ALG)
        assert not cos.is_uniquely_divisible(GK(1), ALG)
        assert cos.has_QmodZ_summand(GK(1), ALG)
        assert not cos.is_divisible(GK(0), ALG)

    @pytest.mark.parametrize("f", [_fq(5), SIMB])
    def test_divisibilitat_fora_hipotesi(self, f):
        with pytest.raises(HipotesiViolada):
            cos.is_divisible(GK(1), f)


class TestTensor:
    def test_lliure(self):
        g = cos.tensor(GroupExpr.lliure(2), GroupExpr.lliure(1) + GroupExpr.ciclic(3), SIMB)
        assert g.pretty() == "Z^2 ⊕ (Z/3)^2"

    def test_ciclics(self):
        assert cos.tensor(GroupExpr.ciclic(4), GroupExpr.ciclic(6), SIMB) == GroupExpr.ciclic(2)

    def test_simbolic(self):
        g = cos.tensor(GroupExpr.gk(1, 3), GroupExpr.gk(1, 2), SIMB)
        assert g.pretty() == "(G_1(k)⊗G_1(k))^6"

    def test_mod_simbolic(self):
        g = cos.tensor(GroupExpr.ciclic(3), GroupExpr.gk(2), SIMB)
        assert g.termes() == {ModTensorGK(3, 2): 1}

    def test_compost(self):
        g = GroupExpr(symbolic=((TensorGK(1, 1), 1),))
        with pytest.raises(ValueError):
            grup.producte_tensorial(g, GroupExpr.lliure(1))

    def test_contra_presentacio(self, rng):
        for _ in range(40):
            a = [rng.randint(2, 12) for _ in range(rng.randint(1, 3))]
            b = [rng.randint(2, 12) for _ in range(rng.randint(1, 3))]
            ga = grup.canonicalize(GroupExpr(torsion=tuple(a)))
            gb = grup.canonicalize(GroupExpr(torsion=tuple(b)))
            assert cos.tensor(ga, gb, SIMB) == _tensor_per_presentacio(a, b)

    def test_commutativa_i_associativa(self, rng):
        def aleatori():
            return (
                GroupExpr.lliure(rng.randint(0, 2))
                + grup.canonicalize(GroupExpr(torsion=tuple(rng.randint(2, 9) for _ in range(2))))
                + GroupExpr.gk(rng.randint(1, 3), rng.randint(0, 2))
            )

        for _ in range(30):
            x, y = aleatori(), aleatori()
            assert cos.tensor(x, y, SIMB) == cos.tensor(y, x, SIMB)
            z = grup.canonicalize(GroupExpr(free_rank=1, torsion=(rng.randint(2, 9),)))
            f = _fq(rng.choice([2, 3, 4, 5, 7]))
            assert cos.tensor(cos.tensor(x, y, f), z, f) == cos.tensor(x, cos.tensor(y, z, f), f)


class TestSuperficies:
    @pytest.mark.parametrize("d", [2, 3, 7])
    def test_con_resolucio(self, d):
        g = teoremes.affine_surface_gtheory(Cone(2, [(0, 1), (d, -1)]), 0)
        assert g.free_rank == 1
        assert g.torsion == (d,)

    def test_llis(self):
        c = Cone(2, [(1, 0), (0, 1)])
        assert teoremes.affine_surface_gtheory(c, 0) == GroupExpr.lliure(1)
        assert teoremes.affine_surface_gtheory(c, 1) == GroupExpr.gk(1)

    def test_grau_senar(self):
        c = Cone(2, [(1, 0), (2, 5)])
        assert teoremes.affine_surface_gtheory(c, 3).pretty() == "G_3(k)"
        assert teoremes.affine_surface_gtheory(c, 2).pretty() == "Z/5 ⊕ G_2(k)"

    @pytest.mark.parametrize("f", [_fq(5), SIMB])
    def test_hipotesi(self, f):
        with pytest.raises(HipotesiViolada):
            teoremes.affine_surface_gtheory(Cone(2, [(1, 0), (2, 5)]), 0, f)

    def test_torsio_fins_a_40(self):
        for b in range(2, 41):
            for a in range(1, b):
                if math.gcd(a, b) != 1:
                    continue
                g = teoremes.affine_surface_gtheory(Cone(2, [(1, 0), (a, b)]), 0, ALG)
                assert g.torsion == (b,)

    def test_delta_semiprimer_gran(self):
        p, q = 2**127 - 1, 2**521 - 1
        c = Cone(2, [(1, 0), (1, p * q)])
        g = teoremes.affine_surface_gtheory(c, 0)
        assert (g.free_rank, g.torsion) == (1, (p * q,))
        assert classe.class_group_affine(c).torsion == (p * q,)

    def test_invariancia_gl2_cataleg(self, rng, unimodular, cataleg):
        cons_cataleg = []
        for path in sorted(cataleg.glob("*.fan")):
            f = fitxer.parse_fan_file(path).to_fan()
            if f.rank == 2:
                cons_cataleg.extend(c for c in (f.con(i) for i in range(len(f.cones))) if len(c.rays) == 2)
        assert cons_cataleg

        def sortides(c):
            forma = superficie.normalize_surface_cone(c)
            return (
                abs(con.delta(c)),
                (forma.a, forma.b),
                superficie.dual_normal_form(c).b,
                classe.class_group_affine(c),
                tuple(teoremes.affine_surface_gtheory(c, n) for n in range(3)),
            )

        for _ in range(200):
            c = rng.choice(cons_cataleg)
            assert sortides(c.transformat(unimodular(2))) == sortides(c)

    def test_anell_del_semigrup(self):
        assert teoremes.semigroup_ring_gtheory(2, 5, 0).pretty() == "Z ⊕ Z/5"
        assert teoremes.monomial_surface_gtheory(4, 0).pretty() == "Z ⊕ Z/4"
        assert teoremes.monomial_surface_gtheory(1, 0) == GroupExpr.lliure(1)
        with pytest.raises(ParametresInvalids):
            teoremes.semigroup_ring_gtheory(2, 4, 0)

    def test_grau_negatiu(self):
        with pytest.raises(ValueError):
            teoremes.affine_surface_gtheory(Cone(2, [(1, 0), (2, 5)]), -1)


class TestTorus:
    def test_g_m(self):
        assert teoremes.torus_chart_gtheory(1, 1, 2) == GroupExpr.gk(2) + GroupExpr.gk(1)

    def test_g_m_quadrat(self):
        g = teoremes.torus_chart_gtheory(0, 2, 2)
        assert g.pretty() == "Z ⊕ G_1(k)^2 ⊕ G_2(k)"

    def test_grau_0(self):
        assert teoremes.torus_chart_gtheory(3, 4, 0) == GroupExpr.lliure(1)

    def test_finit(self):
        assert teoremes.torus_chart_gtheory(0, 1, 1, _fq(5)).pretty() == "Z ⊕ Z/4"


class TestWps:
    def test_112(self):
        assert teoremes.wps_gtheory((1, 1, 2), 0).pretty() == "Z^3"

    def test_p1_simbolic(self):
        assert teoremes.wps_gtheory((1, 1), 1).pretty() == "G_1(k)^2"

    @pytest.mark.parametrize("q", [2, 3, 4, 5, 8, 9])
    def test_aleatoris(self, rng, q):
        for _ in range(10):
            d = rng.randint(1, 6)
            pesos = [rng.randint(1, 7) for _ in range(d + 1)]
            pesos[0] = 1
            assert teoremes.wps_gtheory(pesos, 0, _fq(q)).free_rank == d + 1
            esperat = tuple([q - 1] * (d + 1)) if q > 2 else ()
            assert teoremes.wps_gtheory(pesos, 1, _fq(q)).torsion == esperat
            assert teoremes.wps_gtheory(pesos, 2, _fq(q)).es_zero

    def test_derivacio(self):
        traca = teoremes.wps_derivation((1, 2, 3, 5), 1)
        assert len(traca) == 3
        assert [p.pas for p in traca] == [1, 2, 3]
        assert traca[-1].afirmacio.endswith("G_1(k)^4")

    def test_pesos_invalids(self):
        with pytest.raises(ventall.PesosInvalids):
            teoremes.wps_gtheory((2, 4, 6), 0)


class TestResolucio:
    @pytest.mark.parametrize("d", [1, 2, 3, 4, 5])
    @pytest.mark.parametrize("n", [0, 1, 2, 3, 4])
    def test_dos_copies(self, d, n):
        g = teoremes.resolution_gtheory(d, n)
        if n == 0:
            assert g == GroupExpr.lliure(2)
        else:
            assert g.termes() == {GK(n): 2}
            assert g.free_rank == 0 and not g.torsion

    def test_derivacio(self):
        traca = teoremes.resolution_derivation(3, 1)
        assert len(traca) == 5
        assert "G_1(k)^2" in traca[-1].afirmacio


class TestKunneth:
    def test_p1_per_p1(self):
        assert teoremes.wps_product_gtheory((1, 1), (1, 1), 1, _fq(5)).pretty() == "(Z/4)^8"

    def test_grau_0(self):
        assert teoremes.wps_product_gtheory((1, 1, 2), (1, 3), 0) == GroupExpr.lliure(6)

    @pytest.mark.parametrize("q", [3, 4, 7])
    def test_grau_2(self, q):
        g = teoremes.wps_product_gtheory((1, 1, 1), (1, 2), 2, _fq(q))
        assert g.torsion == tuple([q - 1] * 6)

    def test_simbolic(self):
        g = teoremes.wps_product_gtheory((1, 1), (1, 1, 1), 1)
        assert g.pretty() == "G_1(k)^12"

    # Amb s = dim X + 1 i t = dim Y + 1, sobre F_q: G_0 = Z, G_1 = Z/(q-1), G_2 = 0.
    #   grau 0: Z^s ⊗ Z^t = Z^(st)
    #   grau 1: G_0 ⊗ G_1 ⊕ G_1 ⊗ G_0 = (Z/(q-1))^(2st)
    #   grau 2: G_1 ⊗ G_1 = (Z/(q-1))^(st), els altres dos sumands són nuls
    @pytest.mark.parametrize("wx", ESPAIS_KUNNETH)
    @pytest.mark.parametrize("wy", ESPAIS_KUNNETH)
    @pytest.mark.parametrize("q", [3, 5, 8])
    def test_formes_tancades(self, wx, wy, q):
        st = len(wx) * len(wy)
        f = _fq(q)
        assert teoremes.wps_product_gtheory(wx, wy, 0, f) == GroupExpr.lliure(st)
        assert teoremes.wps_product_gtheory(wx, wy, 1, f) == GroupExpr.ciclic(q - 1).multiple(2 * st)
        assert teoremes.wps_product_gtheory(wx, wy, 2, f) == GroupExpr.ciclic(q - 1).multiple(st)

    @pytest.mark.parametrize("wx", ESPAIS_KUNNETH)
    @pytest.mark.parametrize("wy", ESPAIS_KUNNETH)
    def test_formes_simboliques(self, wx, wy):
        st = len(wx) * len(wy)
        assert teoremes.wps_product_gtheory(wx, wy, 1) == GroupExpr.gk(1, 2 * st)
        esperat = GroupExpr.gk(2, 2 * st) + GroupExpr(symbolic=((TensorGK(1, 1), st),))
        assert teoremes.wps_product_gtheory(wx, wy, 2) == esperat

    def test_grau_no_suportat(self):
        with pytest.raises(GrauNoSuportat):
            teoremes.wps_product_gtheory((1, 1), (1, 1), 3)

    def test_grups_insuficients(self):
        with pytest.raises(ValueError):
            teoremes.kunneth_product([GroupExpr.lliure(1)], [GroupExpr.lliure(1)], 1)


class TestBetti:
    def test_p2(self):
        f = ventall.projective_fan(2)
        assert teoremes.betti_even(f) == [1, 1, 1]
        assert teoremes.g0_rational_dim(f) == 3

    def test_hirzebruch(self):
        f = ventall.hirzebruch_fan(2)
        assert teoremes.betti_even(f) == [1, 2, 1]
        assert teoremes.g0_rational_dim(f) == 4

    def test_p1(self):
        assert teoremes.betti_even(ventall.wps_fan((1, 1))) == [1, 1]

    def test_p3(self):
        assert teoremes.betti_even(ventall.projective_fan(3)) == [1, 1, 1, 1]

    @pytest.mark.parametrize("pesos", [(1, 1, 2), (1, 2, 3), (2, 3, 5), (1, 1, 1, 2), (1, 2, 2, 3, 5)])
    def test_wps(self, pesos):
        f = ventall.wps_fan(pesos)
        betti = teoremes.betti_even(f)
        assert betti == list(reversed(betti))
        assert teoremes.g0_rational_dim(f) == len(pesos)
        assert teoremes.wps_gtheory(pesos, 0).free_rank == len(pesos)

    def test_incomplet(self):
        with pytest.raises(VentallInvalid):
            teoremes.betti_even(ventall.resolution_fan(2))
