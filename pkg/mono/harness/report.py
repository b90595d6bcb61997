"""
Verification Reports
Suite results, counterexample certificates and the JSON / CSV report emission
"""

from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Literal, Optional, Union

import pandas as pd
from pydantic import BaseModel, Field

from .. import __version__

CSV_COLUMNS = ["id", "visited", "passes", "failures", "annotated", "seconds", "seed", "passed"]


@dataclass
class Certificate:
    """A counterexample: the graph, the predicate it violates and witness data"""
    graph: str
    predicate: str
    witness: Dict[str, Any] = field(default_factory=dict)
    annotation: Optional[str] = None

    def to_dict(self) -> Dict:
        return {
            'graph': self.graph,
            'predicate': self.predicate,
            'witness': self.witness,
            'annotation': self.annotation,
        }


@dataclass
class VerificationResult:
    """Outcome of one suite run"""
    suite_id: str
    visited: int = 0
    passes: int = 0
    failures: int = 0
    certificates: List[Certificate] = field(default_factory=list)
    seconds: float = 0.0
    seed: int = 0
    passed: bool = True
    details: Dict[str, Any] = field(default_factory=dict)

    @property
    def annotated(self) -> int:
        return sum(1 for certificate in self.certificates if certificate.annotation)

    def record(self, ok: bool, certificate: Optional[Certificate] = None) -> None:
        self.visited += 1
        if ok:
            self.passes += 1
        else:
            self.failures += 1
            if certificate is not None:
                self.certificates.append(certificate)

    def to_dict(self) -> Dict:
        return {
            'id': self.suite_id,
            'visited': self.visited,
            'passes': self.passes,
            'failures': self.failures,
            'certificates': [certificate.to_dict() for certificate in self.certificates],
            'seconds': round(self.seconds, 3),
            'seed': self.seed,
            'passed': self.passed,
            'details': self.details,
        }

    def get_summary(self) -> str:
        marker = "✅" if self.passed else "❌"
        summary = (f"{marker} {self.suite_id}: {self.passes}/{self.visited} passed, "
                   f"{self.failures} failures ({self.annotated} annotated) in {self.seconds:.1f}s")
        for key, value in self.details.items():
            summary += f"\n   {key}: {value}"
        return summary


# Report schema

class CertificateModel(BaseModel):
    graph: str
    predicate: str
    witness: Dict[str, Any] = Field(default_factory=dict)
    annotation: Optional[str] = None


class SuiteModel(BaseModel):
    id: str
    visited: int = Field(..., ge=0)
    passes: int = Field(..., ge=0)
    failures: int = Field(..., ge=0)
    certificates: List[CertificateModel] = Field(default_factory=list)
    seconds: float = Field(..., ge=0)
    seed: int = 0
    passed: bool = True
    details: Dict[str, Any] = Field(default_factory=dict)


class Report(BaseModel):
    version: str
    config: Dict[str, Any] = Field(default_factory=dict)
    suites: List[SuiteModel] = Field(default_factory=list)
    verdict: Literal["pass", "fail"]


def build_report(results: List[VerificationResult], config: Optional[Dict[str, Any]] = None) -> Report:
    return Report(
        version=__version__,
        config=config or {},
        suites=[SuiteModel(**result.to_dict()) for result in results],
        verdict="pass" if all(result.passed for result in results) else "fail",
    )


def summary_frame(results: List[VerificationResult]) -> pd.DataFrame:
    """One row per suite"""
    rows = [{
        'id': result.suite_id,
        'visited': result.visited,
        'passes': result.passes,
        'failures': result.failures,
        'annotated': result.annotated,
        'seconds': round(result.seconds, 3),
        'seed': result.seed,
        'passed': result.passed,
    } for result in results]
    return pd.DataFrame(rows, columns=CSV_COLUMNS)


def emit_report(results: List[VerificationResult], path: Union[str, Path],
                format: Literal["json", "csv-summary"] = "json",
                config: Optional[Dict[str, Any]] = None) -> None:
    """Write the complete JSON record or the per-suite CSV summary"""
    path = Path(path)
    if format == "json":
        path.write_text(build_report(results, config).model_dump_json(indent=2), encoding="utf-8")
    elif format == "csv-summary":
        summary_frame(results).to_csv(path, index=False)
    else:
        raise ValueError(f"unknown report format '{format}'")


def load_report(path: Union[str, Path]) -> Report:
    return Report.model_validate_json(Path(path).read_text(encoding="utf-8"))
