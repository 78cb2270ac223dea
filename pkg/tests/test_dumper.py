import json
import os

import pandas as pd

from relmin.report.dumper import COLUMNS, ReportDumper
from relmin.verify.suites import Suite, VerifyConfig, run_verify


def sample_report():
    return {
        "suite": "cd_axioms",
        "config": {"suite": "cd_axioms", "seed": 3, "samples": 2},
        "properties": [
            {"name": "composition", "checked": 2, "failed": 1,
             "counterexample": {"x": {"level": 0, "coeffs": ["1"]}}},
            {"name": "associator_counterexample", "checked": 1, "failed": 0,
             "counterexample": None, "witness": {"level": 3}},
        ],
        "exit": 1,
    }


def test_dataframe_rows():
    df = ReportDumper(sample_report()).to_dataframe()
    assert list(df.columns) == COLUMNS
    assert df["passed"].tolist() == [False, True]
    assert df.loc[0, "counterexample"] == '{"x":{"coeffs":["1"],"level":0}}'
    assert df.loc[1, "witness"] == '{"level":3}'
    assert df.loc[1, "counterexample"] == ""


def test_save_writes_under_suite_folder(tmp_path):
    dumper = ReportDumper(sample_report(), str(tmp_path))
    dumper.dump_json(save=True)
    dumper.dump_csv(save=True)
    text = dumper.dump_text(save=True)

    folder = tmp_path / "cd_axioms_seed3"
    assert json.loads((folder / "report.json").read_text()) == sample_report()
    assert len(pd.read_csv(folder / "properties.csv")) == 2
    assert (folder / "summary.txt").read_text().strip() == text
    assert "[FAIL] composition" in text
    assert "counterexample:" in text
    assert "[PASS] associator_counterexample" in text


def test_explicit_paths_skip_the_folder(tmp_path):
    dumper = ReportDumper(sample_report(), str(tmp_path / "unused"))
    dumper.dump_csv(save=True, path=str(tmp_path / "out.csv"))
    dumper.dump_json(save=True, path=str(tmp_path / "out.json"))
    assert os.path.exists(tmp_path / "out.csv")
    assert os.path.exists(tmp_path / "out.json")
    assert not os.path.exists(tmp_path / "unused")


def test_no_save_writes_nothing(tmp_path):
    report = run_verify(VerifyConfig(Suite.ABS_AXIOMS, samples=2))
    dumper = ReportDumper(report, str(tmp_path))
    dumper.dump_text()
    dumper.dump_csv()
    assert list(tmp_path.iterdir()) == []
