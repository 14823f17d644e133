"""Command line front end: exit codes, output formats, determinism."""

import json
import subprocess
import sys

from coprimespec.bicomodule import regular_bicomodule
from coprimespec.catalog import divided_power
from coprimespec.fields import prime_field
from coprimespec.instancefile import save_instance


def run_cli(*args):
    return subprocess.run([sys.executable, "-m", "coprimespec", *args],
                          capture_output=True, text=True, timeout=300)


def test_no_arguments_is_a_usage_error():
    proc = run_cli()
    assert proc.returncode == 2


def test_unknown_reference_is_an_error():
    proc = run_cli("spectrum", "nosuch:3")
    assert proc.returncode == 1
    assert "nosuch" in proc.stderr


def test_validate_a_catalog_reference():
    proc = run_cli("validate", "divided:3", "--field", "F2")
    assert proc.returncode == 0
    assert "ok" in proc.stdout


def test_validate_structured_output():
    proc = run_cli("validate", "grouplike:2", "--report", "structured")
    assert proc.returncode == 0
    payload = json.loads(proc.stdout)
    assert payload["valid"] is True
    assert all(block["ok"] and block["issues"] == []
               for block in payload["blocks"])


def test_spectrum_text_output():
    proc = run_cli("spectrum", "divided:4", "--field", "F2")
    assert proc.returncode == 0
    assert "endomorphism ring dimension 5" in proc.stdout
    assert "fully coprime spectrum: 1 member(s)" in proc.stdout


def test_spectrum_structured_output_is_deterministic():
    first = run_cli("spectrum", "grouplike:3", "--field", "F3",
                    "--report", "structured")
    second = run_cli("spectrum", "grouplike:3", "--field", "F3",
                     "--report", "structured")
    assert first.returncode == 0
    assert first.stdout == second.stdout
    payload = json.loads(first.stdout)
    assert payload["endo_dim"] == 3
    assert len(payload["cpspec"]) == 3


def test_spectrum_over_q_reports_radicals_without_ideal_classes():
    proc = run_cli("spectrum", "divided:3", "--field", "Q",
                   "--report", "structured")
    assert proc.returncode == 0
    payload = json.loads(proc.stdout)
    assert payload["prad_dim"] == 3
    assert "ep" not in payload


def test_spectrum_exhaustive_over_q_is_unsupported():
    proc = run_cli("spectrum", "divided:2", "--field", "Q",
                   "--mode", "exhaustive")
    assert proc.returncode == 3


def test_topology_report():
    proc = run_cli("topology", "grouplike:2", "--field", "F2", "--fi",
                   "--report", "structured")
    assert proc.returncode == 0
    payload = json.loads(proc.stdout)
    assert payload["point_count"] == 2
    assert payload["closed_count"] == 4
    assert payload["closed_bijection"] is True


def test_check_single_instance():
    proc = run_cli("check", "divided:3", "--field", "F2", "--suite", "all")
    assert proc.returncode == 0
    assert "0 FAIL" in proc.stdout


def test_check_suite_prefix_selection():
    proc = run_cli("check", "divided:2", "--suite", "variety-identities")
    assert proc.returncode == 0
    assert "variety-identities" in proc.stdout
    bad = run_cli("check", "divided:2", "--suite", "bogus-name")
    assert bad.returncode == 1


def test_check_random_batch():
    proc = run_cli("check", "--random", "5", "--seed", "3", "--suite",
                   "topology-axioms,closure-formula")
    assert proc.returncode == 0
    assert proc.stdout.count("==") == 5


def test_oracle_command():
    proc = run_cli("oracle", "grouplike:3", "--field", "F3")
    assert proc.returncode == 0
    assert "identical" in proc.stdout


def test_catalog_listing_and_emission(tmp_path):
    listing = run_cli("catalog")
    assert listing.returncode == 0
    assert "grouplike" in listing.stdout
    out = tmp_path / "emitted.json"
    emit = run_cli("catalog", "divided:2", "--field", "F3",
                   "--out", str(out))
    assert emit.returncode == 0
    follow = run_cli("spectrum", str(out))
    assert follow.returncode == 0


def test_instance_files_are_first_class_arguments(tmp_path):
    path = tmp_path / "chain.json"
    save_instance(str(path), regular_bicomodule(divided_power(3,
                                                              prime_field(2))))
    proc = run_cli("check", str(path), "--suite", "annihilator-kernel-galois")
    assert proc.returncode == 0
    assert "PASS" in proc.stdout


def test_invalid_instance_file_is_rejected(tmp_path):
    path = tmp_path / "broken.json"
    payload = {
        "format": "coprimespec-instance",
        "version": 1,
        "field": "F2",
        "left": {"dim": 1, "delta": [], "counit": [0]},
    }
    path.write_text(json.dumps(payload))
    proc = run_cli("validate", str(path))
    assert proc.returncode == 1
    spectrum = run_cli("spectrum", str(path))
    assert spectrum.returncode == 1
