"""Words in the quadruple-symbol generators: relators and user input."""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .symbols import QuadSymbol, canonicalize, format_symbol


@dataclass(frozen=True)
class GroupWord:
    """A finite sequence of (canonical symbol, exponent +-1) letters."""

    letters: tuple[tuple[QuadSymbol, int], ...] = field(default_factory=tuple)

    def __post_init__(self):
        for sym, exp in self.letters:
            if exp not in (1, -1):
                raise ValueError(f"exponent must be +-1, got {exp}")
            if not sym.is_canonical:
                raise ValueError(f"word letters must be canonical, got {sym}")

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: "GroupWord") -> "GroupWord":
        return GroupWord(self.letters + other.letters)

    def inverse(self) -> "GroupWord":
        return GroupWord(tuple((s, -e) for s, e in reversed(self.letters)))

    def free_reduce(self) -> "GroupWord":
        """Cancel adjacent inverse pairs until none remain."""
        out: list[tuple[QuadSymbol, int]] = []
        for letter in self.letters:
            if out and out[-1][0] == letter[0] and out[-1][1] == -letter[1]:
                out.pop()
            else:
                out.append(letter)
        return GroupWord(tuple(out))

    def __str__(self) -> str:
        parts = []
        for sym, exp in self.letters:
            parts.append(format_symbol(sym.entries) + ("" if exp == 1 else "^-1"))
        return "".join(parts) if parts else "1"


_LETTER_RE = re.compile(r"\(\s*(\d+)\s+(\d+)\s+(\d+)\s+(\d+)\s*\)(\^-1)?")


def parse_word(text: str, n: int) -> GroupWord:
    """Parse concatenated "(i j k l)" groups, each optionally followed by "^-1".

    Symbols are canonicalized on input; the exponent is kept as written.
    """
    letters = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _LETTER_RE.match(text, pos)
        if m is None:
            raise ValueError(f"cannot parse word at {text[pos:pos + 20]!r}")
        a, b, c, d = (int(g) for g in m.groups()[:4])
        exp = -1 if m.group(5) else 1
        letters.append((canonicalize(QuadSymbol(a, b, c, d, n)), exp))
        pos = m.end()
        while pos < len(text) and text[pos].isspace():
            pos += 1
    return GroupWord(tuple(letters))
