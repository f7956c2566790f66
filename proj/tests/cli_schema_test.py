"""Runs every CLI subcommand, validates JSON output against schemas/ and checks error lines."""
import json
import pathlib
import subprocess
import sys
import tempfile

import jsonschema

cli = sys.argv[1]
root = pathlib.Path(sys.argv[2])
schema = json.loads((root / "schemas" / "ardlkit.schema.json").read_text())
registry_validator = jsonschema.Draft202012Validator
failures = []


def validate(name, doc):
    sub = {"$schema": schema["$schema"], "$defs": schema["$defs"], "$ref": f"#/$defs/{name}"}
    errors = sorted(registry_validator(sub).iter_errors(doc), key=lambda e: list(e.path))
    for e in errors[:3]:
        failures.append(f"{name}: {list(e.path)}: {e.message}")


def run(*args, expect=0):
    p = subprocess.run([cli, *args], capture_output=True, text=True)
    if p.returncode != expect:
        failures.append(f"{args}: exit {p.returncode}, stderr {p.stderr.strip()}")
    return p


def check(name, *args):
    p = run(*args)
    try:
        validate(name, json.loads(p.stdout))
    except json.JSONDecodeError as e:
        failures.append(f"{args}: not JSON: {e}")


check("ingest", "ingest")
check("summary", "summary")
check("unit_root", "unit-root")
check("unit_root", "unit-root", "--var", "oil", "--test", "adf", "--spec", "ct")
check("bounds", "bounds", "--dependent", "brent", "--model", "china")
check("fit", "fit", "--model", "outside_china", "--bewley")
check("diagnose", "diagnose")
check("simulate", "simulate", "--dgp", "ar1:rho=0.5", "--stat", "adf", "--reps", "20")
check("simulate", "simulate", "--dgp", "cointegrated_pair", "--stat", "bounds", "--reps", "5", "--table", "pss3")

with tempfile.TemporaryDirectory() as tmp:
    out = pathlib.Path(tmp) / "bundle"
    run("replicate", "--out", str(out))
    validate("replicate", json.loads((out / "replicate.json").read_text()))
    for f in ["replicate.txt", "cusum_wti_total.csv", "cusum_brent_outside_china.csv"]:
        if not (out / f).exists():
            failures.append(f"replicate bundle lacks {f}")

    sub = pathlib.Path(tmp) / "one"
    run("replicate", "--dependent", "wti", "--variant", "total", "--out", str(sub))
    doc = json.loads((sub / "replicate.json").read_text())
    if [m["model"] for m in doc["models"]] != ["wti_total"]:
        failures.append("subset replicate did not give a single wti_total model")

    cfg = pathlib.Path(tmp) / "panel.cfg"
    cfg.write_text("# brent panel\ndependent = brent\ncovid_scope = china\n")
    doc = json.loads(run("bounds", "--config", str(cfg)).stdout)
    if doc["model"] != "brent_china":
        failures.append("config file not applied")
    doc = json.loads(run("bounds", "--config", str(cfg), "--dependent", "wti").stdout)
    if doc["model"] != "wti_china":
        failures.append("flag did not override config file")

    plot = pathlib.Path(tmp) / "plot.csv"
    run("export-plot", "--out", str(plot))
    if not plot.read_text().startswith("date,"):
        failures.append("export-plot header")

    # Errors: nonzero exit, one stderr line "error: <category>: ...".
    for args, category in [
        (["bounds", "--dependent", "nope"], "config"),
        (["simulate", "--dgp", "nope"], "unknown_dgp"),
        (["fit", "--data-dir", tmp], "io"),
        (["bogus-command"], "usage"),
    ]:
        p = subprocess.run([cli, *args], capture_output=True, text=True)
        lines = p.stderr.strip().splitlines()
        if p.returncode == 0 or len(lines) != 1 or not lines[0].startswith(f"error: {category}: "):
            failures.append(f"{args}: exit {p.returncode}, stderr {p.stderr!r}")

help_text = run("--help").stdout
for key in ["dependent", "covid_scope", "shift.covid", "transform.epu", "window.start", "window.end"]:
    if key not in help_text:
        failures.append(f"--help lacks key {key}")

for f in failures:
    print("FAIL", f)
print("ok" if not failures else f"{len(failures)} failure(s)")
sys.exit(1 if failures else 0)
