"""Pass/fail reports produced by axiom checkers and verification runs."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class CheckItem:
    name: str
    passed: bool
    witness: str | None = None
    skipped: bool = False

    def line(self) -> str:
        status = "SKIP" if self.skipped else ("PASS" if self.passed else "FAIL")
        extra = f"  [{self.witness}]" if self.witness else ""
        return f"{status}  {self.name}{extra}"


@dataclass
class CheckReport:
    title: str
    items: list[CheckItem] = field(default_factory=list)

    def add(self, name: str, passed: bool, witness: str | None = None) -> None:
        self.items.append(CheckItem(name, passed, witness))

    def add_skip(self, name: str, witness: str | None = None) -> None:
        self.items.append(CheckItem(name, True, witness, skipped=True))

    @property
    def passed(self) -> bool:
        return all(item.passed for item in self.items if not item.skipped)

    def failures(self) -> list[CheckItem]:
        return [item for item in self.items if not item.passed and not item.skipped]

    def __getitem__(self, name: str) -> CheckItem:
        for item in self.items:
            if item.name == name:
                return item
        raise KeyError(name)

    def __str__(self) -> str:
        lines = [self.title]
        lines.extend("  " + item.line() for item in self.items)
        return "\n".join(lines)
