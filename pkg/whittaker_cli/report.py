from dataclasses import dataclass, field
from typing import Any, Dict, List

from commons.constants import (
    KEY_ANCHOR, KEY_CASE_NAME, KEY_CAVEATS, KEY_EXPECTED, KEY_INPUTS, KEY_KNOWN_DISCREPANCIES, KEY_MATCH,
    KEY_PAPER_EXPECTATIONS, KEY_RESULTS, MSG_GOLDEN_MISMATCH,
)


@dataclass
class Report:
    """Class for one command or golden case: inputs echoed, results, and the expectations they are held to"""
    case_name: str
    inputs: Dict[str, Any]
    results: Dict[str, Any] = field(default_factory=dict)
    paper_expectations: Dict[str, Dict[str, Any]] = field(default_factory=dict)
    known_discrepancies: List[Dict[str, Any]] = field(default_factory=list)
    caveats: List[str] = field(default_factory=list)

    def expect(self, key: str, expected: Any, anchor: str) -> None:
        self.paper_expectations[key] = {KEY_EXPECTED: expected, KEY_ANCHOR: anchor}

    def mismatches(self) -> List[str]:
        """One message per expectation whose result differs, naming the anchor it contradicts"""
        messages = []
        for key, expectation in sorted(self.paper_expectations.items()):
            actual = self.results.get(key)
            if actual != expectation[KEY_EXPECTED]:
                messages.append(MSG_GOLDEN_MISMATCH.format(case=self.case_name, key=key,
                                                           expected=expectation[KEY_EXPECTED], actual=actual,
                                                           anchor=expectation[KEY_ANCHOR]))
        return messages

    @property
    def match(self) -> bool:
        return not self.mismatches()

    def to_dict(self) -> Dict[str, Any]:
        return {
            KEY_CASE_NAME: self.case_name,
            KEY_INPUTS: self.inputs,
            KEY_RESULTS: self.results,
            KEY_PAPER_EXPECTATIONS: self.paper_expectations,
            KEY_KNOWN_DISCREPANCIES: self.known_discrepancies,
            KEY_CAVEATS: self.caveats,
            KEY_MATCH: self.match,
        }

