"""Pipelines whose byte-for-byte output is committed under golden/."""

import subprocess
import sys
from pathlib import Path

TESTS_DIR = Path(__file__).parent

CASES = [
    ("gen_divisor12.txt", [["gen", "divisor", "12"]]),
    ("spec_divisor12.json", [["gen", "divisor", "12"], ["spec"]]),
    ("spec_divisor12.dot", [["gen", "divisor", "12"], ["spec", "--dot"]]),
    ("verify_divisor12.json", [["gen", "divisor", "12"], ["verify"]]),
    ("radical_divisor12_4.json", [["gen", "divisor", "12"], ["radical", "-", "4"]]),
    ("supp_divisor12_4.json", [["gen", "divisor", "12"], ["supp", "-", "4"]]),
    ("classify_divisor12.json", [["gen", "divisor", "12"], ["classify"]]),
    ("decompose_divisor12_1.json", [["gen", "divisor", "12"], ["decompose", "-", "1"]]),
    ("spec_divisor60.json", [["gen", "divisor", "60"], ["spec"]]),
    ("dual_sierpinski.json", [["dual", "data/sierpinski.spc"]]),
    ("openlattice_sierpinski.json", [["openlattice", "data/sierpinski.spc"]]),
    ("openlattice_sierpinski.dot", [["openlattice", "data/sierpinski.spc", "--dot"]]),
    ("gen_semiring_boolean.txt", [["gen", "semiring", "data/boolean.sr"]]),
    ("adjoint_check_z12.json",
     [["adjoint-check", "data/z12.lat", "data/z12dual.spc", "data/z12supp.datum"]]),
    ("classifying_z12.json", [["classifying", "data/z12supp.datum"]]),
]


def run_pipeline(stages):
    """Run the stages as a shell-style pipe, returning (stdout, exit code)."""
    data = b""
    code = 0
    for stage in stages:
        proc = subprocess.run([sys.executable, "-m", "latspec", *stage],
                              input=data, capture_output=True, cwd=TESTS_DIR)
        data = proc.stdout
        code = proc.returncode
        if code not in (0, 1):
            raise AssertionError(
                f"stage {stage} exited {code}: {proc.stderr.decode()}")
    return data, code


def regenerate():
    golden = TESTS_DIR / "golden"
    golden.mkdir(exist_ok=True)
    for name, stages in CASES:
        data, code = run_pipeline(stages)
        assert code == 0, f"{name}: exit {code}"
        (golden / name).write_bytes(data)
        print(f"wrote {name} ({len(data)} bytes)")


if __name__ == "__main__":
    regenerate()
