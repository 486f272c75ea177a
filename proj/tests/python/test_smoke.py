import sumfree as sf


def test_field_arithmetic():
    F = sf.Field(8)
    a = 0x53
    assert F.add(a, a) == 0
    assert F.mul(a, F.inv(a)) == 1
    assert F.inv(0) == 0
    assert F.inv(a) == F.inv_euclid(a)
    assert F.frobenius(a, 8) == a


def test_default_modulus():
    assert sf.default_modulus_hex(3) == "b"  # X^3 + X + 1
    F = sf.Field(3, "b")
    assert F.mul(0b010, 0b101) == 1


def test_factorization():
    fz = sf.factor_xn_plus_1(7)
    assert fz["n"] == 7
    degrees = sorted(len(bin(int(f["poly"], 16))) - 3 for f in fz["factors"])
    assert degrees == [1, 3, 3]
    assert sf.poly_order("7") == 3  # X^2+X+1


def test_table1_row():
    rows = sf.table1(31)
    by_d = {r["d"]: r for r in rows}
    assert by_d[7] == {"d": 7, "o": 3, "cnt": 2, "Nd": 1}
    assert by_d[31]["Nd"] == 3


def test_kset():
    assert sf.kset(12)["kset"] == [2, 3, 4, 5, 6, 7, 8, 9, 10, 12]
    assert sf.kset(11)["kset"] == [11]


def test_witness_and_verify():
    cert = sf.witness(6, 3)
    assert cert is not None
    assert cert["verified"]
    assert sf.verify(cert)
    tampered = dict(cert)
    tampered["basis"] = list(cert["basis"])
    tampered["basis"][0] = tampered["basis"][1]
    assert not sf.verify(tampered)


def test_exhaustive_sum_free():
    out = sf.witness_exhaustive(5, 3)
    assert out["result"] == "sum-free"
    assert out["enumerated"] == 155


def test_classify():
    assert sf.classify(7, 2, budget=0)["verdict"] == "SUM_FREE"
    st = sf.classify(12, 7, budget=50)
    assert st["verdict"] == "NOT_SUM_FREE"
    assert "factor_catalog" in st["criteria_fired"]


def test_solver_parity():
    even = sf.Field(8)
    odd = sf.Field(9)
    assert len(even.solve_first_var([3])) > 0
    assert len(odd.solve_first_var([3])) == 0


def test_lang_weil():
    assert sf.lang_weil(28, 3)["small"]
    assert not sf.lang_weil(27, 3)["small"]
