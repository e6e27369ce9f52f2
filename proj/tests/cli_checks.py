"""Command-line checks for the fracgrad tool: exit codes, byte-stable output, schema, apply."""

import json
import os
import struct
import subprocess
import sys
import tempfile
import unittest

import jsonschema

TOOL = None
SCHEMA = None


def run(*args, env=None):
    return subprocess.run([TOOL, *args], capture_output=True, text=True, env=env)


def write_binary_field(path, n, N, L, values):
    with open(path, "wb") as f:
        f.write(b"FGRD")
        f.write(struct.pack("<IIIdII", 1, n, N, L, 1, 1))
        f.write(struct.pack("<%dd" % len(values), *values))


def read_binary_field(path):
    with open(path, "rb") as f:
        data = f.read()
    assert data[:4] == b"FGRD"
    _, n, N, L, _, comps = struct.unpack_from("<IIIdII", data, 4)
    count = comps * N**n
    return struct.unpack_from("<%dd" % count, data, 4 + struct.calcsize("<IIIdII"))


class ExitCodes(unittest.TestCase):
    def test_pass_is_zero(self):
        self.assertEqual(run("verify", "--experiment", "liouville", "--N", "128").returncode, 0)

    def test_failure_is_one(self):
        with tempfile.TemporaryDirectory() as tmp:
            cfg = os.path.join(tmp, "cfg.json")
            with open(cfg, "w") as f:
                json.dump({"experiment": "liouville", "params": {"N": 128}, "tolerances": {"proportionality": 1e-30}}, f)
            self.assertEqual(run("verify", "--config", cfg).returncode, 1)

    def test_usage_errors_are_two(self):
        self.assertEqual(run().returncode, 2)
        self.assertEqual(run("verify").returncode, 2)
        self.assertEqual(run("verify", "--experiment", "nonsense").returncode, 2)
        self.assertEqual(run("verify", "--experiment", "hardy", "--param", "bogus=1").returncode, 2)
        self.assertEqual(run("constants", "--n", "2", "--s", "1.5").returncode, 2)
        self.assertEqual(run("apply", "--op", "frac_laplacian").returncode, 2)

    def test_unknown_config_key(self):
        with tempfile.TemporaryDirectory() as tmp:
            cfg = os.path.join(tmp, "cfg.json")
            with open(cfg, "w") as f:
                json.dump({"experiment": "liouville", "colour": "blue"}, f)
            self.assertEqual(run("verify", "--config", cfg).returncode, 2)


class Output(unittest.TestCase):
    def test_no_timestamp_is_byte_stable(self):
        for fmt in ("csv", "json"):
            args = ("verify", "--experiment", "hardy", "--n", "2", "--s", "0.5", "--p", "1.5",
                    "--param", "samples=5", "--seed", "4", "--format", fmt, "--no-timestamp")
            a, b = run(*args), run(*args)
            self.assertEqual(a.returncode, 0)
            self.assertEqual(a.stdout, b.stdout)
            self.assertNotIn("timestamp", a.stdout)

    def test_json_reports_match_schema(self):
        with open(SCHEMA) as f:
            schema = json.load(f)
        for args in (("verify", "--experiment", "measure"),
                     ("verify", "--experiment", "moser", "--no-timestamp"),
                     ("verify", "--experiment", "adams", "--N", "64")):
            out = run(*args, "--format", "json")
            self.assertEqual(out.returncode, 0, out.stderr)
            jsonschema.validate(json.loads(out.stdout), schema)

    def test_csv_header(self):
        out = run("verify", "--experiment", "measure", "--format", "csv")
        lines = out.stdout.splitlines()
        self.assertTrue(lines[0].startswith("# generated "))
        self.assertEqual(lines[1], "experiment,label,measured,reference,provenance,relation,tolerance,pass")

    def test_out_dir_environment(self):
        with tempfile.TemporaryDirectory() as tmp:
            env = dict(os.environ, FRACGRAD_OUT_DIR=tmp)
            out = run("verify", "--experiment", "measure", "--format", "json", env=env)
            self.assertEqual(out.returncode, 0)
            self.assertEqual(out.stdout, "")
            with open(os.path.join(tmp, "measure.json")) as f:
                self.assertEqual(json.load(f)["name"], "measure")

    def test_constants(self):
        out = run("constants", "--n", "2", "--alpha", "1", "--p", "3", "--format", "json")
        self.assertEqual(out.returncode, 0, out.stderr)
        values = {c["name"]: c["value"] for c in json.loads(out.stdout)["constants"]}
        self.assertAlmostEqual(values["c_alpha_p_gt_n"], 4.4663038334461775, places=12)
        self.assertAlmostEqual(values["extremal_ratio"], values["c_alpha_p_gt_n"], places=12)
        csv = run("constants", "--n", "2", "--alpha", "1", "--p", "3", "--format", "csv")
        self.assertEqual(csv.returncode, 0)


class Sweep(unittest.TestCase):
    def test_lattice_csv(self):
        with tempfile.TemporaryDirectory() as tmp:
            cfg = os.path.join(tmp, "sweep.json")
            with open(cfg, "w") as f:
                json.dump({"experiment": "liouville", "lattice": {"s": [0.3, 0.6], "N": [64, 128]}}, f)
            out = run("sweep", "--config", cfg, "--format", "csv", "--no-timestamp", "--jobs", "2")
            self.assertEqual(out.returncode, 0, out.stderr)
            lines = out.stdout.splitlines()
            self.assertEqual(lines[0], "s,N,verdict,entries,failed")
            self.assertEqual(len(lines), 5)
            again = run("sweep", "--config", cfg, "--format", "csv", "--no-timestamp", "--jobs", "1")
            self.assertEqual(out.stdout, again.stdout)

    def test_sweep_needs_lattice(self):
        self.assertEqual(run("sweep", "--experiment", "liouville").returncode, 2)


class Apply(unittest.TestCase):
    def test_identity_at_zero_order(self):
        with tempfile.TemporaryDirectory() as tmp:
            src, dst = os.path.join(tmp, "u.fgrd"), os.path.join(tmp, "v.fgrd")
            values = [((i * 37) % 11) / 7.0 - 0.5 for i in range(16 * 16)]
            write_binary_field(src, 2, 16, 1.0, values)
            out = run("apply", "--in", src, "--op", "frac_laplacian", "--s", "0", "--out", dst)
            self.assertEqual(out.returncode, 0, out.stderr)
            self.assertEqual(list(read_binary_field(dst)), values)

    def test_csv_field_and_reject_policy(self):
        with tempfile.TemporaryDirectory() as tmp:
            src, dst = os.path.join(tmp, "u.csv"), os.path.join(tmp, "v.csv")
            with open(src, "w") as f:
                f.write("x,value\n")
                for i in range(16):
                    f.write("%r,%r\n" % (-0.5 + (i + 0.5) / 16, 1.0))
            ok = run("apply", "--in", src, "--op", "riesz_potential", "--alpha", "0.5", "--out", dst)
            self.assertEqual(ok.returncode, 0, ok.stderr)
            bad = run("apply", "--in", src, "--op", "riesz_potential", "--alpha", "0.5",
                      "--param", 'zero_mode="reject"', "--out", dst)
            self.assertEqual(bad.returncode, 2)

    def test_missing_input(self):
        out = run("apply", "--in", "/nonexistent.fgrd", "--op", "frac_laplacian", "--s", "0.5", "--out", "/tmp/x.fgrd")
        self.assertNotEqual(out.returncode, 0)


if __name__ == "__main__":
    TOOL, SCHEMA = sys.argv[1], sys.argv[2]
    unittest.main(argv=sys.argv[:1], verbosity=2)
