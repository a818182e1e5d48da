"""End-to-end checks for the bhverify command-line tool.

Run as: python3 cli_test.py /path/to/bhverify
"""

import json
import os
import subprocess
import sys
import tempfile

BIN = sys.argv[1]
FAILURES = []


def run(*args, env_extra=None):
    env = os.environ.copy()
    env.pop("BHVERIFY_CONFIG", None)
    if env_extra:
        env.update(env_extra)
    return subprocess.run([BIN, *args], capture_output=True, text=True, env=env)


def check(name, condition, detail=""):
    if condition:
        print(f"ok: {name}")
    else:
        print(f"FAIL: {name} {detail}")
        FAILURES.append(name)


def report_of(proc):
    doc = json.loads(proc.stdout)
    assert doc["schema"] == 1, doc
    return doc


def main():
    tmp = tempfile.mkdtemp(prefix="bhverify_cli_")

    proc = run("verify", "torus:2,3")
    doc = report_of(proc)
    check("verify torus:2,3 exits 0", proc.returncode == 0, proc.stderr)
    check("verify torus:2,3 verdict true", doc["result"]["verdict"] == "true")
    check("report echoes the command", doc["command"] == "verify torus:2,3")
    check("report echoes the config", doc["config"]["max_degree"] == 80)
    check("meta carries wall time", "wall_ms" in doc["meta"] and "timestamp" in doc["meta"])

    proc2 = run("verify", "torus:2,3")
    head = proc.stdout.split('"meta"')[0]
    head2 = proc2.stdout.split('"meta"')[0]
    check("repeat runs are byte-identical outside meta", head == head2)

    proc = run("verify", "torus:4,6")
    check("gcd > 1 is a parameter error", proc.returncode == 3, proc.stderr)
    check("parameter error names the cause", "gcd" in proc.stderr)

    proc = run("verify", "trefoil")
    check("unknown descriptor is a parse error", proc.returncode == 3, proc.stderr)

    proc = run("verify", "pretzel:3")
    check("verify pretzel:3 exits 0", proc.returncode == 0, proc.stderr)
    check("pretzel verdict true", report_of(proc)["result"]["verdict"] == "true")

    proc = run("verify", "connectsum:[torus:2,3,pretzel:1]")
    doc = report_of(proc)
    check("connect sum exits 0", proc.returncode == 0, proc.stderr)
    check("connect sum composes evidence",
          doc["result"]["evidence"]["kind"] == "connect_sum"
          and len(doc["result"]["evidence"]["children"]) == 2)

    proc = run("verify", "torus:2,3", "--max-terms", "1")
    check("starved caps exit 2", proc.returncode == 2, proc.stderr)
    check("starved verdict is indeterminate",
          report_of(proc)["result"]["verdict"] == "indeterminate")

    proc = run("verify", "torus:2,3", "--max-terms", "0")
    check("non-positive cap is a usage error", proc.returncode == 3)

    proc = run("verify", "torus:2,3", "--format", "text")
    check("text format exits 0", proc.returncode == 0, proc.stderr)
    check("text format states the verdict", "verdict: true" in proc.stdout)

    proc = run("daha", "trefoil")
    doc = report_of(proc)
    check("daha trefoil passes", proc.returncode == 0 and doc["result"]["pass"] is True,
          proc.stderr)
    check("daha result has no runtime field",
          all("runtime_ms" not in r for r in doc["result"]["reports"]))

    proc = run("daha", "relations", "--window", "10")
    check("daha relations --window 10 passes", proc.returncode == 0, proc.stderr)

    proc = run("daha", "fig8")
    check("daha fig8 passes", proc.returncode == 0, proc.stderr)

    proc = run("daha", "dunkl")
    doc = report_of(proc)
    check("daha dunkl covers both signs",
          proc.returncode == 0 and len(doc["result"]["reports"]) == 2, proc.stderr)

    proc = run("daha", "spectral")
    check("unknown daha check is a usage error", proc.returncode == 3)

    holds_path = os.path.join(tmp, "holds.txt")
    with open(holds_path, "w") as f:
        f.write("l^2*m^6 - l*m^6 + l - 1\n")
    proc = run("apoly", holds_path)
    check("divisibility condition holds", proc.returncode == 0, proc.stderr)
    check("apoly reports the quotient", report_of(proc)["result"]["holds"] is True)

    fails_path = os.path.join(tmp, "fails.txt")
    with open(fails_path, "w") as f:
        f.write("l^3*m^24 - l^2*m^24 - l + 1\n")
    proc = run("apoly", fails_path)
    check("failing polynomial exits 1", proc.returncode == 1, proc.stderr)
    check("apoly reports the remainder", report_of(proc)["result"]["holds"] is False)

    bad_path = os.path.join(tmp, "bad.txt")
    with open(bad_path, "w") as f:
        f.write("l^2 +* m\n")
    proc = run("apoly", bad_path)
    check("malformed polynomial is a parse error", proc.returncode == 3)

    proc = run("apoly", os.path.join(tmp, "missing.txt"))
    check("missing file is a usage error", proc.returncode == 3)

    report_path = os.path.join(tmp, "report.json")
    proc = run("verify", "torus:2,3", "--out", report_path)
    check("--out writes the report", proc.returncode == 0 and os.path.exists(report_path))
    with open(report_path) as f:
        saved = f.read()
    check("--out matches stdout", saved == proc.stdout)

    proc = run("check-cert", report_path)
    check("fresh report re-verifies", proc.returncode == 0, proc.stderr)
    check("recheck reports a match", report_of(proc)["result"]["match"] is True)

    doc = json.loads(saved)
    node = doc["result"]["evidence"]
    while node["kind"] in ("bezout", "connect_sum"):
        node = node["children"][0]
    if node["kind"] == "covering":
        node = node["base"]["evidence"]
    cert = node["certificate"]
    cert["cofactors"][0] = cert["cofactors"][0] + " + 1"
    tampered_path = os.path.join(tmp, "tampered.json")
    with open(tampered_path, "w") as f:
        json.dump(doc, f)
    proc = run("check-cert", tampered_path)
    check("tampered cofactor is rejected", proc.returncode == 1, proc.stderr)
    check("tampered recheck supports false",
          report_of(proc)["result"]["supported"] == "false")

    del doc["result"]["evidence"]
    broken_path = os.path.join(tmp, "broken.json")
    with open(broken_path, "w") as f:
        json.dump(doc, f)
    proc = run("check-cert", broken_path)
    check("missing evidence is a schema violation", proc.returncode == 3)

    config_path = os.path.join(tmp, "config.json")
    with open(config_path, "w") as f:
        json.dump({"max_terms": 1}, f)
    proc = run("verify", "torus:2,3", env_extra={"BHVERIFY_CONFIG": config_path})
    check("config file lowers the caps", proc.returncode == 2, proc.stderr)
    check("report snapshots the file config",
          report_of(proc)["config"]["max_terms"] == 1)

    proc = run("verify", "torus:2,3", "--max-terms", "2000000",
               env_extra={"BHVERIFY_CONFIG": config_path})
    check("flags override the config file", proc.returncode == 0, proc.stderr)

    with open(config_path, "w") as f:
        json.dump({"max_depth": 3}, f)
    proc = run("verify", "torus:2,3", env_extra={"BHVERIFY_CONFIG": config_path})
    check("unknown config key is rejected", proc.returncode == 3)

    proc = run()
    check("missing subcommand is a usage error", proc.returncode == 3)

    proc = run("--help")
    check("help exits 0", proc.returncode == 0)

    proc = run("--version")
    check("version exits 0", proc.returncode == 0 and proc.stdout.strip() != "")

    if FAILURES:
        print(f"{len(FAILURES)} failure(s): {FAILURES}")
        sys.exit(1)
    print("all cli checks passed")


if __name__ == "__main__":
    main()
