"""The certificate suite: individual scenarios, determinism, concurrency."""

import pytest

from crystalposets import scenarios


def test_s1():
    cert = scenarios.s1_base_interval()
    assert cert.passed
    assert cert.computed["mobius"] == 2
    assert cert.computed["vertices"] == 12


@pytest.mark.parametrize("n,component", [(3, 1), (4, 2), (5, 5)])
def test_s2(n, component):
    cert = scenarios.s2_disconnected_chains(n)
    assert cert.passed
    assert cert.computed["increasing_component_chains"] == component


def test_s2_rejects_out_of_range():
    with pytest.raises(ValueError):
        scenarios.s2_disconnected_chains(7)


def test_s3():
    cert = scenarios.s3_product_mobius(2)
    assert cert.passed
    assert cert.computed["mobius"] == 4
    assert cert.computed["vertices"] == 144
    assert cert.computed["rank_sizes"] == [1, 6, 17, 30, 36, 30, 17, 6, 1]


def test_s3_degenerates_to_base_interval():
    cert = scenarios.s3_product_mobius(1)
    assert cert.passed
    assert cert.computed["mobius"] == 2
    assert cert.computed["vertices"] == 12


def test_s4():
    assert scenarios.s4_non_lattice().passed


def test_s5():
    cert = scenarios.s5_disconnected_fiber()
    assert cert.passed
    assert cert.computed["component_sizes"] == [2, 6]


@pytest.mark.parametrize("shape,n", scenarios.DEFAULT_MATRIX)
def test_s6(shape, n):
    assert scenarios.s6_lower_interval_mobius(shape, n).passed


@pytest.mark.parametrize("shape,n", scenarios.DEFAULT_MATRIX)
def test_s7(shape, n):
    assert scenarios.s7_axioms_and_connectivity(shape, n).passed


def test_s8():
    cert = scenarios.s8_witness_from_mobius()
    assert cert.passed
    assert cert.computed["intervals_with_large_mobius"] >= 2


def test_s10():
    cert = scenarios.s10_staircase_sphere()
    assert cert.passed
    assert cert.computed["2,1|n=3"] == 1
    assert cert.computed["3,2,1|n=4"] == -1
    assert cert.computed["2,2|n=4"] == 0


def test_run_all_passes_and_sorts():
    certs = scenarios.run_all(n_max=3)
    assert all(c.passed for c in certs)
    ids = [c.scenario for c in certs]
    assert ids == sorted(ids, key=lambda s: (int(s.split("[")[0][1:]), s))


def test_run_all_filter():
    certs = scenarios.run_all(n_max=4, only="s2")
    assert [c.scenario for c in certs] == ["s2[n=3]", "s2[n=4]"]
    with pytest.raises(ValueError):
        scenarios.run_all(only="s99")


def test_certificate_stream_is_deterministic():
    first = scenarios.certificates_to_json(scenarios.run_all(n_max=3, only="s6"))
    second = scenarios.certificates_to_json(scenarios.run_all(n_max=3, only="s6"))
    assert first == second


def test_jobs_merge_deterministically():
    sequential = scenarios.certificates_to_json(scenarios.run_all(n_max=3, only="s7"))
    threaded = scenarios.certificates_to_json(
        scenarios.run_all(n_max=3, only="s7", jobs=4)
    )
    assert sequential == threaded


def test_crashed_scenario_reports_failure(monkeypatch):
    def boom():
        raise RuntimeError("deliberate")

    monkeypatch.setattr(scenarios, "s4_non_lattice", boom)
    certs = scenarios.run_all(n_max=3, only="s4")
    assert len(certs) == 1
    assert not certs[0].passed
    assert "deliberate" in str(certs[0].computed)
