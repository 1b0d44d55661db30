"""Reports repository for persistent storage of count, bound and verify reports"""

import json
import os
from datetime import datetime
from pathlib import Path
from typing import Any, Literal

from pydantic import BaseModel

from kcolored.infrastructure.instances import atomic_write_text
from kcolored.infrastructure.logging import get_logger

logger = get_logger("registry.repository")

REPORT_KIND = Literal["count", "bound", "verify"]
REPORT_KINDS: tuple[REPORT_KIND, ...] = ("count", "bound", "verify")


class ReportsRepository:
    """Repository for storing and retrieving reports as JSON files"""

    def __init__(self, base_path: Path | str | None = None):
        """Initialize repository with base path

        Args:
            base_path: Base directory for storage (default: $KCOLORED_REPORTS_DIR or data/reports)
        """
        if base_path is None:
            base_path = os.getenv("KCOLORED_REPORTS_DIR", "data/reports")
        self.base_path = Path(base_path)
        self.index_path = self.base_path / "index.json"

        for kind in REPORT_KINDS:
            self._kind_path(kind).mkdir(parents=True, exist_ok=True)
        if not self.index_path.exists():
            self._init_index()

    def _kind_path(self, kind: str) -> Path:
        if kind not in REPORT_KINDS:
            raise ValueError(f"Unknown report kind '{kind}', expected one of {REPORT_KINDS}")
        return self.base_path / kind

    def _init_index(self):
        now = datetime.now().isoformat()
        self._write_index({"runs": {}, "kinds": {}, "k": {}, "n": {}, "created_at": now, "updated_at": now})

    def _read_index(self) -> dict[str, Any]:
        if not self.index_path.exists():
            self._init_index()
        with self.index_path.open("r") as f:
            return json.load(f)

    def _write_index(self, index: dict[str, Any]):
        index["updated_at"] = datetime.now().isoformat()
        atomic_write_text(self.index_path, json.dumps(index, indent=2, default=str))

    def _update_index(self, run_id: str, kind: str, k: int | None, n: int | None, stored_at: datetime):
        index = self._read_index()

        entry = index["runs"].setdefault(run_id, {"k": k, "n": n, "stored_at": stored_at.isoformat(), "kinds": []})
        if kind not in entry["kinds"]:
            entry["kinds"].append(kind)

        for key, value in (("kinds", kind), ("k", k), ("n", n)):
            if value is None:
                continue
            bucket = index[key].setdefault(str(value), [])
            if run_id not in bucket:
                bucket.append(run_id)

        self._write_index(index)

    def store(self, kind: REPORT_KIND, report: BaseModel | dict[str, Any], run_id: str | None = None) -> str:
        """Store a report

        Args:
            kind: count, bound or verify
            report: pydantic report or plain dict
            run_id: Run identifier (default: report's run_id)

        Returns:
            Storage ID
        """
        data = report.model_dump(mode="json") if isinstance(report, BaseModel) else dict(report)
        run_id = run_id or data.get("run_id")
        if not run_id:
            raise ValueError("Report has no run_id")

        storage_id = f"{kind}-{run_id}"
        stored_at = datetime.now()
        data["_metadata"] = {"storage_id": storage_id, "stored_at": stored_at.isoformat(), "report_kind": kind}
        atomic_write_text(self._kind_path(kind) / f"{run_id}.json", json.dumps(data, indent=2, default=str))

        self._update_index(run_id, kind, data.get("k"), data.get("n"), stored_at)
        logger.debug(f"Stored {kind} report: {storage_id}")
        return storage_id

    def retrieve(self, kind: REPORT_KIND, run_id: str) -> dict[str, Any] | None:
        path = self._kind_path(kind) / f"{run_id}.json"
        if not path.exists():
            return None
        with path.open("r") as f:
            return json.load(f)

    def retrieve_by_run_id(self, run_id: str) -> dict[str, Any] | None:
        """All reports stored under a run id, keyed by kind, plus the index entry"""
        index = self._read_index()
        if run_id not in index["runs"]:
            return None
        results: dict[str, Any] = {}
        for kind in index["runs"][run_id]["kinds"]:
            report = self.retrieve(kind, run_id)
            if report is not None:
                results[kind] = report
        if not results:
            return None
        results["_index"] = index["runs"][run_id]
        return results

    def list_runs(self, kind: REPORT_KIND | None = None, k: int | None = None, n: int | None = None) -> list[str]:
        """Run ids matching every given filter, in storage order"""
        index = self._read_index()
        run_ids = list(index["runs"])
        for key, value in (("kinds", kind), ("k", k), ("n", n)):
            if value is not None:
                allowed = set(index[key].get(str(value), []))
                run_ids = [run_id for run_id in run_ids if run_id in allowed]
        return run_ids

    def get_total_count(self, kind: REPORT_KIND | None = None) -> int:
        return len(self.list_runs(kind=kind))
