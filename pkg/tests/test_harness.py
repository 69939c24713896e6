import json
import subprocess
import sys

import pytest

from spectra import (
    CLAIMS,
    CorpusConfig,
    DEFAULT_CAPS,
    generate_corpus,
    resolve_suite,
    run_suite,
)
from spectra.caps import caps_from_env
from spectra.errors import ValidationError
from spectra.harness import TOPOLOGY_COUNTS, brute_force_topology_families

SMALL = CorpusConfig(
    max_points=2, zmod_max=6, product_max=6, quotient_max=6, atom_max=2,
    adjunction_targets=2,
)


@pytest.fixture(scope="module")
def small_corpus():
    return generate_corpus(SMALL, DEFAULT_CAPS)


def run_cli(*argv, env_extra=None):
    import os

    env = dict(os.environ)
    if env_extra:
        env.update(env_extra)
    return subprocess.run(
        [sys.executable, "-m", "spectra", *argv],
        capture_output=True,
        text=True,
        env=env,
    )


# --------------------------------------------------------------- corpus --


def test_corpus_shape(small_corpus):
    assert len(small_corpus.spaces) == 5
    assert len(small_corpus.rings) == 27
    assert len(small_corpus.algebras) == 30
    names = [n for n, _ in small_corpus.rings]
    assert "zmod(2)" in names
    assert "zmod(2)xzmod(3)" in names
    assert "zmod(6)/<3>" in names
    assert names == sorted(set(names), key=names.index)  # no duplicates


def test_corpus_space_names(small_corpus):
    names = [n for n, _ in small_corpus.spaces]
    assert names == ["top1[0]", "top2[0]", "top2[1]", "top2[2]", "top2[3]"]


def test_corpus_quotient_sizes_respect_bound(small_corpus):
    for name, ring in small_corpus.rings:
        if "/" in name:
            assert ring.n <= SMALL.quotient_max


def test_corpus_rejects_bad_bounds():
    with pytest.raises(ValidationError):
        generate_corpus(CorpusConfig(max_points=0))


def test_brute_force_topology_counts():
    for n in (1, 2, 3):
        assert len(brute_force_topology_families(n)) == TOPOLOGY_COUNTS[n]


# ---------------------------------------------------------------- suite --


def test_resolve_suite():
    assert resolve_suite("all") == tuple(CLAIMS)
    assert resolve_suite("thm-max-reg") == ("thm-max-reg",)
    assert resolve_suite("adjunction") == ("thm-alternative",)
    assert set(resolve_suite("sober")) == {
        "prop-sober-i", "prop-sober-ii", "prop-sober-iii",
    }
    with pytest.raises(ValidationError):
        resolve_suite("nonsense")


def test_empty_corpus_gives_empty_passing_report():
    from spectra.harness import Corpus

    empty = Corpus(SMALL, (), (), ())
    result = run_suite(empty, "all", DEFAULT_CAPS)
    assert result.reports == ()
    assert result.passed
    assert result.summary() == {"pass": 0, "fail": 0}


def test_run_suite_all_green(small_corpus):
    result = run_suite(small_corpus, "all", DEFAULT_CAPS)
    assert result.passed
    summary = result.summary()
    assert summary["fail"] == 0
    assert summary["pass"] == len(result.reports)


def test_run_suite_is_deterministic(small_corpus):
    a = run_suite(small_corpus, "all", DEFAULT_CAPS).to_json()
    b = run_suite(small_corpus, "all", DEFAULT_CAPS).to_json()
    assert a == b


def test_suite_report_shape(small_corpus):
    result = run_suite(small_corpus, "max-reg", DEFAULT_CAPS)
    data = json.loads(result.to_json())
    assert sorted(data) == ["caps", "claims", "config", "seed", "suite", "summary"]
    assert all(
        sorted(entry) == ["claim", "pass", "subject", "witness"]
        for entry in data["claims"]
    )
    subjects = [entry["subject"] for entry in data["claims"]]
    assert subjects == sorted(subjects)


def test_reports_ordered_canonically(small_corpus):
    result = run_suite(small_corpus, "all", DEFAULT_CAPS)
    keys = [(r.claim, r.subject) for r in result.reports]
    assert keys == sorted(keys)


# ----------------------------------------------------------------- caps --


def test_caps_from_env_parses_pairs():
    caps = caps_from_env(DEFAULT_CAPS, "max_prime_carrier=32,max_points_exhaustive=3")
    assert caps.max_prime_carrier == 32
    assert caps.max_points_exhaustive == 3
    assert caps.max_product_carrier == DEFAULT_CAPS.max_product_carrier


def test_caps_from_env_rejects_garbage():
    with pytest.raises(ValidationError):
        caps_from_env(DEFAULT_CAPS, "max_prime_carrier")
    with pytest.raises(ValidationError):
        caps_from_env(DEFAULT_CAPS, "unknown_cap=4")
    with pytest.raises(ValidationError):
        caps_from_env(DEFAULT_CAPS, "max_prime_carrier=soon")


def test_caps_immutable():
    with pytest.raises(Exception):
        DEFAULT_CAPS.max_prime_carrier = 5


# ------------------------------------------------------------------ cli --


def test_cli_ring_output_frozen():
    proc = run_cli("ring", "--zmod", "12", "mr")
    assert proc.returncode == 0
    assert json.loads(proc.stdout) == [["0", "4", "8"], ["0", "3", "6", "9"]]


def test_cli_ring_quotient():
    proc = run_cli("ring", "--zmod", "12", "--quotient", "4", "idempotents")
    assert proc.returncode == 0
    assert json.loads(proc.stdout) == ["{0,4,8}", "{1,5,9}"]


def test_cli_product_components():
    proc = run_cli("ring", "--product", "4,9", "components")
    assert proc.returncode == 0
    rows = json.loads(proc.stdout)
    assert len(rows) == 2
    assert {row["component"][0] for row in rows} == {"P0", "P1"}


def test_cli_algebra_spec():
    proc = run_cli("algebra", "--powerset", "2", "spec")
    assert proc.returncode == 0
    data = json.loads(proc.stdout)
    assert data["space"]["points"] == ["{0}", "{1}"]
    assert len(data["ultrafilters"]) == 2


def test_cli_topo_round_trip(tmp_path):
    space_file = tmp_path / "space.json"
    space_file.write_text(
        json.dumps({"points": ["a", "b"], "opens": [[], ["a"], ["a", "b"]]})
    )
    proc = run_cli("topo", "--file", str(space_file), "soberify")
    assert proc.returncode == 0
    data = json.loads(proc.stdout)
    assert data["unit"] == {"a": "{a,b}", "b": "{b}"}

    dot = run_cli("topo", "--file", str(space_file), "components", "--dot")
    assert dot.returncode == 0
    assert dot.stdout.startswith("digraph")


def test_cli_is_deterministic():
    args = (
        "verify", "--suite", "max-reg", "--max-ring", "4", "--max-product", "4",
        "--max-quotient", "4", "--json", "-", "--quiet",
    )
    a = run_cli(*args)
    b = run_cli(*args)
    assert a.returncode == 0
    assert a.stdout == b.stdout


def test_cli_verify_text_report():
    proc = run_cli(
        "verify", "--suite", "oracle-topology-counts", "--max-points", "3",
        "--max-ring", "2", "--max-product", "2", "--max-quotient", "2",
    )
    assert proc.returncode == 0
    lines = proc.stdout.strip().splitlines()
    assert lines[-1] == "suite=oracle-topology-counts pass=3 fail=0"
    assert all(line.startswith("pass ") for line in lines[:-1])


def test_cli_error_exit_codes(tmp_path):
    bad = run_cli("ring", "--zmod", "0", "primes")
    assert bad.returncode == 2
    assert "error:" in bad.stderr

    unknown = run_cli("verify", "--suite", "nope")
    assert unknown.returncode == 2

    missing = run_cli("topo", "--file", str(tmp_path / "nothing.json"), "clopens")
    assert missing.returncode == 2


def test_cli_caps_env_is_honored():
    proc = run_cli(
        "ring", "--product", "8,9", "primes",
        env_extra={"SPECTRA_CAPS": "max_product_carrier=16"},
    )
    assert proc.returncode == 2
    assert "cap" in proc.stderr


def test_cli_verify_json_file(tmp_path):
    out = tmp_path / "report.json"
    proc = run_cli(
        "verify", "--suite", "cor-coarser", "--max-ring", "4", "--max-product", "4",
        "--max-quotient", "4", "--quiet", "--json", str(out),
    )
    assert proc.returncode == 0
    data = json.loads(out.read_text())
    assert data["summary"]["fail"] == 0
