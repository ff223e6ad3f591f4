import json
import os
import subprocess
import sys
import pytest

from golden_cases import CASES, TESTS_DIR, run_pipeline


def latspec(*args, stdin=b"", env=None, cwd=TESTS_DIR):
    merged = dict(os.environ)
    if env:
        merged.update(env)
    return subprocess.run([sys.executable, "-m", "latspec", *args],
                          input=stdin, capture_output=True, env=merged, cwd=cwd)


@pytest.mark.parametrize("name,stages", CASES, ids=[c[0] for c in CASES])
def test_golden_pipeline(name, stages):
    data, code = run_pipeline(stages)
    assert code == 0
    assert data == (TESTS_DIR / "golden" / name).read_bytes()


class TestExitCodes:
    def test_verify_valid_lattice_exits_zero(self):
        proc = latspec("verify", "data/z12.lat")
        assert proc.returncode == 0

    def test_verify_one_element_lattice(self):
        text = b"elements: e\ntop: e\nbottom: e\nmul: e*e=e\n"
        proc = latspec("verify", stdin=text)
        assert proc.returncode == 0

    def test_verify_broken_lattice_exits_one(self):
        text = (b"elements: 0 b c 1\nleq: 0<b 0<c b<1 c<1\ntop: 1\nbottom: 0\n"
                b"mul: 0*0=0 0*b=0 0*c=0 0*1=0 b*0=0 b*b=0 b*c=0 b*1=b\n"
                b"  c*0=0 c*b=0 c*c=0 c*1=c 1*0=0 1*b=b 1*c=c 1*1=1\n")
        proc = latspec("verify", stdin=text)
        assert proc.returncode == 1
        report = json.loads(proc.stdout)
        assert not report["ok"]
        failed = [c for c in report["checks"] if not c["passed"]]
        assert failed[0]["name"] == "L3_distributive"
        assert failed[0]["witness"] == ["b", "b", "c"]

    def test_parse_error_exits_two(self):
        proc = latspec("verify", stdin=b"elements: a\n")
        assert proc.returncode == 2
        assert b"error" in proc.stderr

    def test_unknown_element_exits_two(self):
        proc = latspec("radical", "data/z12.lat", "7Z")
        assert proc.returncode == 2

    def test_missing_file_exits_two(self):
        proc = latspec("spec", "no/such/file.lat")
        assert proc.returncode == 2

    def test_invalid_lattice_input_for_spec_exits_two(self):
        text = (b"elements: 0 1\nleq: 0<1\ntop: 1\nbottom: 0\n"
                b"mul: 0*0=0 0*1=1 1*0=1 1*1=1\n")  # bottom does not annihilate
        proc = latspec("spec", stdin=text)
        assert proc.returncode == 2

    def test_decompose_non_semiprime_exits_two(self):
        proc = latspec("decompose", "data/z12.lat", "4")
        assert proc.returncode == 2
        assert b"not semiprime" in proc.stderr

    def test_classifying_false_exits_one(self):
        proc = latspec("classifying", "data/z12supp_deleted.datum")
        assert proc.returncode == 1
        assert json.loads(proc.stdout) == {"classifying": False}

    def test_invalid_datum_exits_one_with_report(self):
        bad = (b"lattice: z12.lat\nspace: z12dual.spc\n"
               b"sigma: 1={2} 2={3} 3={2} 4={3} 6={} 12={}\n")
        path = TESTS_DIR / "data" / "bad.datum"
        path.write_bytes(bad)
        try:
            proc = latspec("adjoint-check", "data/z12.lat", "data/z12dual.spc",
                           "data/bad.datum")
            assert proc.returncode == 1
            payload = json.loads(proc.stdout)
            assert payload["valid"] is False
        finally:
            path.unlink()


class TestFlags:
    def test_quiet_suppresses_output(self):
        proc = latspec("spec", "data/z12.lat", "--quiet")
        assert proc.returncode == 0
        assert proc.stdout == b""

    def test_dot_rejected_where_not_graphical(self):
        proc = latspec("radical", "data/z12.lat", "4", "--dot")
        assert proc.returncode == 2

    def test_format_dot_equals_dot_flag(self):
        a = latspec("dual", "data/sierpinski.spc", "--dot")
        b = latspec("dual", "data/sierpinski.spc", "--format", "dot")
        assert a.stdout == b.stdout

    def test_max_enum_flag_skips_uniqueness(self):
        proc = latspec("adjoint-check", "data/z12.lat", "data/z12dual.spc",
                       "data/z12supp.datum", "--max-enum", "1")
        assert proc.returncode == 0
        payload = json.loads(proc.stdout)
        assert payload["uniqueness"]["note"].startswith("skipped")

    def test_max_enum_env_var(self):
        proc = latspec("adjoint-check", "data/z12.lat", "data/z12dual.spc",
                       "data/z12supp.datum", env={"LATSPEC_MAX_ENUM": "1"})
        payload = json.loads(proc.stdout)
        assert payload["uniqueness"]["note"].startswith("skipped")


class TestDeterminism:
    def test_spec_output_is_byte_stable(self):
        runs = {latspec("spec", "data/z12.lat").stdout for _ in range(3)}
        assert len(runs) == 1

    def test_pipe_composes_json_and_text(self):
        # openlattice emits JSON; spec accepts it back
        lattice_json = latspec("openlattice", "data/sierpinski.spc").stdout
        proc = latspec("spec", stdin=lattice_json)
        assert proc.returncode == 0
        assert json.loads(proc.stdout) == {"primes": ["{}", "{1}"]}
