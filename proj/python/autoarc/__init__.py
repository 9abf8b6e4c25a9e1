"""Exact arc spaces of infinitesimal deformations over fat points."""

import json as _json

from ._autoarc import (
    JobParseError,
    ResourceGuardError,
    UnsupportedInputError,
    arc_ideal,
    classify,
    cohen_macaulay_test,
    endo_ideal,
    groebner_basis,
    krull_dimension,
    radical_membership,
    tor_one_support_dimension,
)
from ._autoarc import run_job_file as _run_job_file
from ._autoarc import run_job_text as _run_job_text


def run_job_file(path):
    """Run a job file and return the report payload as a dict."""
    return _json.loads(_run_job_file(str(path)))


def run_job_text(text):
    """Run a job given as text and return the report payload as a dict."""
    return _json.loads(_run_job_text(text))


__all__ = [
    "JobParseError",
    "ResourceGuardError",
    "UnsupportedInputError",
    "arc_ideal",
    "classify",
    "cohen_macaulay_test",
    "endo_ideal",
    "groebner_basis",
    "krull_dimension",
    "radical_membership",
    "run_job_file",
    "run_job_text",
    "tor_one_support_dimension",
]
