#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Enumerate twisted torus knots with negative twisting up to a crossing bound,
and record their Alexander polynomials and fiberedness verdicts.
"""

__all__ = ["ScanRecord", "ScanSummary", "crossing_count", "enumerate_parameters",
    "scan", "summarize", "write_csv", "write_json", "CSV_HEADER"]

import json
import logging
import multiprocessing as mp
import sys
from collections import namedtuple
from math import gcd

import numpy as np

from . import utils
from .core import UnsupportedParameters, alexander_closed_form, canonicalize
from .fibered import (VERDICTS, FIBERED_POSITIVE_BRAID, INCONCLUSIVE,
    NOT_FIBERED_NON_MONIC, fiberedness_verdict)

logger = logging.getLogger(__name__)

CSV_HEADER = ("p", "q", "r", "s", "crossings", "degree", "leading_coeff",
    "monic", "verdict")

# A published survey of the same range found 2,152 knots, 49 of them
# non-fibered, under an unstated enumeration convention.
SURVEY_MAX_CROSSINGS = 100
SURVEY_TOTAL, SURVEY_NON_FIBERED = (2152, 49)


class ScanRecord(namedtuple("ScanRecord",
    ("params", "crossings", "result", "verdict"))):
    """ One enumerated knot with its Alexander polynomial and verdict. """

    __slots__ = ()

    def to_row(self):
        """ Return the CSV row of this record, as strings. """
        return tuple(str(value) for value in self.params.key) + (
            str(self.crossings), str(self.result.degree),
            str(self.result.leading_coeff),
            "true" if self.result.monic else "false", self.verdict.status)


    def to_dict(self):
        """ Return the JSON-ready form of this record. """
        record = self.result.to_dict()
        record.update(crossings=self.crossings, verdict=self.verdict.status,
            witness=self.verdict.witness)
        return record


ScanSummary = namedtuple("ScanSummary", ("max_crossings", "total", "counts",
    "non_monic", "certified", "skipped", "record_hash"))


def crossing_count(params):
    """
    Return the number of crossings of the standard braid diagram of T(p,q;r,s),
    which is the letter count q(p-1) + |s| r(r-1) of its braid word.

    :param params:
        Canonical `TTKParams` with r <= p.
    """

    p, q, r, s = params.key
    if not 1 <= r <= p:
        raise UnsupportedParameters(
            "r = {} is outside the supported range 1 <= r <= p = {}".format(r, p))
    return q * (p - 1) + abs(s) * r * (r - 1)


def enumerate_parameters(max_crossings, include_torus_reductions=False):
    """
    Return the canonical `(p, q, r, s)` tuples with p > q > 0 coprime, s < 0
    and at most `max_crossings` crossings, ordered by `(p, q, r, s)`.

    :param max_crossings:
        The crossing bound.

    :param include_torus_reductions: [optional]
        Also include r = p for every admissible s, and r = 1 with s = -1.
        These are torus knots and are left out by default.
    """

    tuples = []
    for p in range(2, max_crossings + 2):
        for q in range(1, p):
            base = q * (p - 1)
            if base > max_crossings:
                break
            if gcd(p, q) != 1:
                continue

            if include_torus_reductions:
                tuples.append((p, q, 1, -1))

            r_values = list(range(2, p))
            if include_torus_reductions:
                r_values.append(p)

            for r in r_values:
                per_twist = r * (r - 1)
                s_max = (max_crossings - base) // per_twist
                tuples.extend((p, q, r, s) for s in range(-s_max, 0))

    return sorted(tuples)


def _scan_one(p, q, r, s):
    try:
        params = canonicalize((p, q, r, s))

    except UnsupportedParameters:
        logger.debug("Skipping T({},{};{},{})".format(p, q, r, s))
        return None

    result = alexander_closed_form(params)
    verdict = fiberedness_verdict(params, result)
    return ScanRecord(params, crossing_count(params), result, verdict)


def summarize(records, max_crossings, skipped=0):
    """
    Return the totals of a scan.

    :param records:
        The `ScanRecord`s, in scan order.

    :param max_crossings:
        The crossing bound used.

    :param skipped: [optional]
        The number of enumerated tuples that were skipped.
    """

    statuses = np.array([record.verdict.status for record in records] or [""])
    counts = dict((verdict, int(np.sum(statuses == verdict)))
                  for verdict in VERDICTS)
    non_monic = sum(not record.result.monic for record in records)

    serialized = json.dumps([record.to_dict() for record in records],
        sort_keys=True)
    return ScanSummary(max_crossings, len(records), counts, non_monic,
        counts[FIBERED_POSITIVE_BRAID], skipped, utils.short_hash(serialized))


def scan(max_crossings, include_torus_reductions=False, jobs=1, progress=False):
    """
    Compute the Alexander polynomial and fiberedness verdict of every twisted
    torus knot with s < 0 whose standard braid diagram has at most
    `max_crossings` crossings.

    :param max_crossings:
        The crossing bound. Zero gives an empty scan.

    :param include_torus_reductions: [optional]
        Include the torus knot reductions r = 1 and r = p.

    :param jobs: [optional]
        The number of worker processes.

    :param progress: [optional]
        Draw a progressbar on standard error.

    :returns:
        A two-length tuple of the `ScanRecord`s ordered by `(p, q, r, s)`, and a
        `ScanSummary`.
    """

    max_crossings = int(max_crossings)
    if max_crossings < 0:
        raise ValueError("the crossing bound must be non-negative, not {}"\
            .format(max_crossings))
    jobs = int(jobs)
    if jobs < 1:
        raise ValueError("jobs must be at least 1, not {}".format(jobs))

    items = enumerate_parameters(max_crossings, include_torus_reductions)
    N = len(items)

    if jobs > 1 and N > 1:
        pool = mp.Pool(jobs, initializer=utils._init_pool,
            initargs=(utils._counter, ))
        mapper = pool.map
    else:
        mapper, pool = (map, None)

    func = utils.wrapper(_scan_one, None, None, N,
        message="Scanning {} twisted torus knots with at most {} crossings"\
            .format(N, max_crossings),
        stream=sys.stderr if progress else None)

    try:
        results = list(mapper(func, items))

    finally:
        if pool is not None:
            pool.close()
            pool.join()

    records = sorted((record for record in results if record is not None),
        key=lambda record: record.params.key)
    summary = summarize(records, max_crossings, N - len(records))

    logger.info("Scanned {} knots up to {} crossings: {} positive braid, {} "
        "non-monic, {} inconclusive, {} skipped".format(summary.total,
            max_crossings, summary.certified, summary.counts[NOT_FIBERED_NON_MONIC],
            summary.counts[INCONCLUSIVE], summary.skipped))

    if max_crossings == SURVEY_MAX_CROSSINGS:
        logger.info("For comparison, a published survey of this range reports "
            "{} knots with {} non-fibered; counting conventions differ".format(
                SURVEY_TOTAL, SURVEY_NON_FIBERED))

    return (records, summary)


def write_csv(records, fp):
    """
    Write scan records as CSV with the header
    p,q,r,s,crossings,degree,leading_coeff,monic,verdict.

    :param records:
        The `ScanRecord`s.

    :param fp:
        A path or a writable text stream.
    """

    rows = np.array([record.to_row() for record in records], dtype=object)\
        .reshape((-1, len(CSV_HEADER)))
    np.savetxt(fp, rows, fmt="%s", delimiter=",", header=",".join(CSV_HEADER),
        comments="")


def write_json(records, summary, fp):
    """
    Write scan records, with their full coefficient lists, and the scan summary
    as JSON.

    :param records:
        The `ScanRecord`s.

    :param summary:
        The `ScanSummary`.

    :param fp:
        A writable text stream.
    """

    json.dump(dict(summary=summary._asdict(),
        records=[record.to_dict() for record in records]), fp, indent=2,
        sort_keys=True)
    fp.write("\n")
