import pytest

import medsg


def test_info():
    info = medsg.info([7, 9, 11, 15])
    assert info["frobenius"] == 19
    assert info["genus"] == 12
    assert info["pseudo_frobenius"] == [13, 17, 19]
    assert not info["is_med"]
    assert not medsg.is_med([7, 9, 11, 15])


def test_minimal_generators_normalize():
    assert medsg.minimal_generators([3, 3, 7, 5, 10, 12]) == [3, 5, 7]


def test_med_closure_all_methods_agree():
    out = medsg.med_closure([7, 24, 33])
    assert out["agree"]
    assert out["result"]["minimal_generators"] == [7, 24, 33, 41, 50, 58, 67]
    # Too many candidate gaps for the intersection oracle here.
    assert out["intersection_skipped"]

    small = medsg.med_closure([2, 3])
    assert small["agree"]
    assert not small["intersection_skipped"]


def test_apery():
    out = medsg.apery([7, 9, 11, 15], 7)
    assert sorted(out["elements"]) == [0, 9, 11, 15, 20, 24, 26]
    assert out["minima"] == [7, 9, 11, 15]
    hat = medsg.apery([4, 7, 17], 4, hat=True)
    assert hat["elements"] == [4, 17, 14, 7]


def test_arf():
    assert medsg.is_arf([7, 11, 13, 15, 16, 17, 19])
    assert not medsg.is_arf_element([9, 13, 14, 16, 17, 19, 20, 21, 24], 13)


def test_symmetric():
    assert medsg.is_symmetric([2, 3])
    assert not medsg.is_symmetric([7, 9, 11, 15])


def test_invalid_generators():
    with pytest.raises(medsg.SemigroupError):
        medsg.minimal_generators([4, 6])


def test_extend():
    out = medsg.extend([5, 6, 7, 9], 2)
    assert out["extended"]["minimal_generators"] == [4, 5, 6, 7]
    assert out["genus_drop"] == 2


def test_d_bound():
    assert medsg.d_bound([11, 12, 13, 32, 53]) == (202, 1)
    assert medsg.d_bound([7, 24, 33]) == (126, 17)


def test_fuzz():
    out = medsg.fuzz(seed=3, samples=10, m_max=6, gen_max=40)
    assert out["passed"] == 10
    assert out["failures"] == []
