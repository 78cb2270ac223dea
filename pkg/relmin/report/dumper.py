import json
import os
from typing import Any, Dict, Optional

import pandas as pd

from relmin.report.config import PROPERTIES_CSV, REPORT_DIRECTORY, REPORT_JSON, SUMMARY_TEXT

COLUMNS = ["name", "checked", "failed", "passed", "counterexample", "witness"]


class ReportDumper:
    def __init__(self, report: Dict[str, Any], directory: Optional[str] = None):
        """
        Wrap one verification report. Files go to <directory>/<suite>_seed<seed>/.
        """
        self.report = report
        config = report.get("config", {})
        self.subfolder = os.path.join(directory or REPORT_DIRECTORY,
                                      f"{report['suite']}_seed{config.get('seed', 0)}")

    def _ensure_folder(self) -> None:
        os.makedirs(self.subfolder, exist_ok=True)

    def to_dataframe(self) -> pd.DataFrame:
        """One row per property; JSON payloads are kept as compact strings."""
        rows = []
        for prop in self.report["properties"]:
            rows.append({
                "name": prop["name"],
                "checked": prop["checked"],
                "failed": prop["failed"],
                "passed": prop["failed"] == 0,
                "counterexample": _compact(prop.get("counterexample")),
                "witness": _compact(prop.get("witness")),
            })
        return pd.DataFrame(rows, columns=COLUMNS)

    def dump_csv(self, save: bool = False, path: Optional[str] = None) -> pd.DataFrame:
        df = self.to_dataframe()
        if save:
            if path is None:
                self._ensure_folder()
                path = os.path.join(self.subfolder, PROPERTIES_CSV)
            df.to_csv(path, index=False)
        return df

    def dump_json(self, save: bool = False, path: Optional[str] = None) -> str:
        text = json.dumps(self.report, indent=2)
        if save:
            if path is None:
                self._ensure_folder()
                path = os.path.join(self.subfolder, REPORT_JSON)
            with open(path, "w", encoding="utf-8") as f:
                f.write(text + "\n")
        return text

    def dump_text(self, save: bool = False) -> str:
        """
        Plain summary: one line per property, failures followed by their
        first counterexample.
        """
        df = self.to_dataframe()
        lines = [
            f"=== Suite {self.report['suite']} ===",
            f"Config: {_compact(self.report.get('config'))}",
            f"Properties: {len(df)}  Failed: {int((~df['passed']).sum())}  Exit: {self.report['exit']}",
            "",
        ]
        for _, row in df.iterrows():
            status = "PASS" if row["passed"] else "FAIL"
            lines.append(f"[{status}] {row['name']}  ({row['failed']}/{row['checked']} failed)")
            if not row["passed"] and row["counterexample"]:
                lines.append(f"    counterexample: {row['counterexample']}")
        text = "\n".join(lines)

        if save:
            self._ensure_folder()
            with open(os.path.join(self.subfolder, SUMMARY_TEXT), "w", encoding="utf-8") as f:
                f.write(text + "\n")
        return text


def _compact(payload: Any) -> str:
    if payload is None:
        return ""
    return json.dumps(payload, sort_keys=True, separators=(",", ":"))
