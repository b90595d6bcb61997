"""Verification harness module"""

from .verifier import CertificateVerifier, CheckResult
from .report import (
    Certificate, VerificationResult, Report, CSV_COLUMNS,
    build_report, summary_frame, emit_report, load_report
)
from .suites import (
    SuiteParams, SuiteRunner, UnknownSuiteError, PREDICATES, SUITE_IDS, SUITE_LIMITS,
    OPEN_CONJECTURE, HEURISTIC_EXHAUSTED, run_suite, replay_certificate
)

__all__ = [
    'CertificateVerifier', 'CheckResult',
    'Certificate', 'VerificationResult', 'Report', 'CSV_COLUMNS',
    'build_report', 'summary_frame', 'emit_report', 'load_report',
    'SuiteParams', 'SuiteRunner', 'UnknownSuiteError', 'PREDICATES', 'SUITE_IDS', 'SUITE_LIMITS',
    'OPEN_CONJECTURE', 'HEURISTIC_EXHAUSTED', 'run_suite', 'replay_certificate',
]
