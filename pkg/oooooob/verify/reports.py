'''
This file contains the verification report and its serializations.
'''

import json
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Iterable, List, Optional

import pandas as pd

from oooooob.models.position import Position

DEFAULT_MISMATCH_CAP = 100


class Status(Enum):
    PASS = 'PASS'
    FAIL = 'FAIL'
    PARTIAL = 'PARTIAL'

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class Mismatch:
    position: Position
    claimed: str
    oracle: str
    # a position of the same class with the other outcome, for consistency sweeps
    witness: Optional[Position] = None

    def to_dict(self) -> Dict:
        document = {'position': str(self.position), 'claimed': self.claimed,
                    'oracle': self.oracle}
        if self.witness is not None:
            document['witness'] = str(self.witness)
        return document


@dataclass
class VerificationReport:
    '''
    The outcome of one sweep. mismatches keeps at most mismatch_cap entries while
    mismatch_count stays exact. An advisory report turns mismatches into PARTIAL
    rather than FAIL. Disagreements at registered counterexamples of a conjecture are
    listed in known_counterexamples, left out of mismatch_count, and make the report
    PARTIAL.
    '''
    classifier: str
    variant: Optional[str]
    region: Dict
    states_checked: int = 0
    applicable: int = 0
    mismatch_count: int = 0
    mismatches: List[Mismatch] = field(default_factory=list)
    assertions: List[Dict] = field(default_factory=list)
    known_counterexamples: List[Mismatch] = field(default_factory=list)
    mismatch_cap: Optional[int] = DEFAULT_MISMATCH_CAP
    advisory: bool = False

    def add_mismatch(self, position: Position, claimed, oracle,
                     witness: Optional[Position] = None, known: bool = False) -> None:
        if known:
            self.known_counterexamples.append(Mismatch(position, str(claimed), str(oracle)))
            return
        self.mismatch_count += 1
        if self.mismatch_cap is None or len(self.mismatches) < self.mismatch_cap:
            self.mismatches.append(Mismatch(position, str(claimed), str(oracle), witness))

    def add_assertion(self, name: str, expected, observed) -> bool:
        ok = expected == observed
        self.assertions.append({'name': name, 'expected': str(expected),
                                'observed': str(observed), 'ok': ok})
        if not ok:
            self.mismatch_count += 1
        return ok

    @property
    def status(self) -> Status:
        if self.mismatch_count == 0:
            return Status.PARTIAL if self.known_counterexamples else Status.PASS
        return Status.PARTIAL if self.advisory else Status.FAIL

    def to_dict(self) -> Dict:
        document = {
            'classifier': self.classifier,
            'variant': self.variant,
            'region': self.region,
            'states_checked': self.states_checked,
            'applicable': self.applicable,
            'mismatch_count': self.mismatch_count,
            'mismatches': [m.to_dict() for m in self.mismatches],
            'status': str(self.status),
        }
        if self.known_counterexamples:
            document['known_counterexamples'] = [m.to_dict() for m in self.known_counterexamples]
        if self.assertions:
            document['assertions'] = self.assertions
        return document

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False)

    def to_text(self) -> str:
        variant = self.variant or '-'
        lines = [f'{self.status} {self.classifier} [{variant}] {_region_text(self.region)}: '
                 f'{self.states_checked} states, {self.applicable} applicable, '
                 f'{self.mismatch_count} mismatches']
        for m in self.mismatches:
            lines.append(f'  {m.position or "()"}: claimed {m.claimed}, oracle {m.oracle}')
        for m in self.known_counterexamples:
            lines.append(f'  {m.position}: claimed {m.claimed}, oracle {m.oracle} '
                         f'(known counterexample)')
        for a in self.assertions:
            mark = 'ok' if a['ok'] else 'FAILED'
            lines.append(f'  {a["name"]}: {a["observed"]} ({mark})')
        return '\n'.join(lines)


def _region_text(region: Dict) -> str:
    return ' '.join(f'{k}={v}' for k, v in region.items())


def _by_position(m: Mismatch):
    return len(m.position), tuple(m.position)


def merge_reports(parts: Iterable[VerificationReport],
                  mismatch_cap: Optional[int] = DEFAULT_MISMATCH_CAP) -> VerificationReport:
    '''
    Combines the reports of disjoint chunks of one sweep. Mismatches are re-sorted by
    position before truncation so the result does not depend on how the sweep was
    split, provided the chunks kept all their mismatches.
    '''
    parts = list(parts)
    if not parts:
        raise ValueError('Nothing to merge')
    first = parts[0]
    merged = VerificationReport(first.classifier, first.variant, first.region,
                                mismatch_cap=mismatch_cap, advisory=first.advisory)
    everything, known = [], []
    for part in parts:
        merged.states_checked += part.states_checked
        merged.applicable += part.applicable
        merged.mismatch_count += part.mismatch_count
        everything.extend(part.mismatches)
        known.extend(part.known_counterexamples)
    everything.sort(key=_by_position)
    merged.known_counterexamples = sorted(known, key=_by_position)
    merged.mismatches = everything if mismatch_cap is None else everything[:mismatch_cap]
    return merged


def reports_to_json(reports: List[VerificationReport]) -> str:
    if len(reports) == 1:
        return reports[0].to_json()
    return json.dumps([r.to_dict() for r in reports], indent=2, ensure_ascii=False)


def reports_frame(reports: List[VerificationReport]) -> pd.DataFrame:
    columns = ['classifier', 'variant', 'region', 'states_checked', 'applicable',
               'mismatch_count', 'status']
    rows = []
    for report in reports:
        document = report.to_dict()
        document['region'] = _region_text(report.region)
        rows.append([document[c] for c in columns])
    return pd.DataFrame(rows, columns=columns)


def format_reports(reports: List[VerificationReport], fmt: str = 'text') -> str:
    if fmt == 'json':
        return reports_to_json(reports) + '\n'
    if fmt == 'csv':
        return reports_frame(reports).to_csv(index=False, lineterminator='\n')
    if fmt == 'text':
        return '\n'.join(r.to_text() for r in reports) + '\n'
    raise ValueError(f'Unknown report format {fmt!r}')


def overall_status(reports: Iterable[VerificationReport]) -> Status:
    statuses = {r.status for r in reports}
    if Status.FAIL in statuses:
        return Status.FAIL
    return Status.PARTIAL if Status.PARTIAL in statuses else Status.PASS
