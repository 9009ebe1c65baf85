import re
from dataclasses import dataclass, field

from core.errors import ArgumentError

_LETTER_RE = re.compile(r"^([bB])(\d+)$")
_HISTORY_RE = re.compile(r"^b([+-])(\d+)$")


@dataclass(frozen=True)
class Letter:
    index: int  # beta_{index, index+1}, 1-based
    exp: int = 1  # +1 or -1

    def __post_init__(self):
        if self.exp not in (1, -1):
            raise ArgumentError(f"braid letter exponent must be +1 or -1, got {self.exp}")
        if self.index < 1:
            raise ArgumentError(f"braid letter index must be >= 1, got {self.index}")

    def inverse(self) -> "Letter":
        return Letter(self.index, -self.exp)

    def __str__(self):
        return ("b" if self.exp > 0 else "B") + str(self.index)


@dataclass(frozen=True)
class BraidWord:
    """Word in the elementary braids of B_n; letters act left to right."""

    n: int
    letters: tuple[Letter, ...] = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))
        for letter in self.letters:
            if letter.index > self.n - 1:
                raise ArgumentError(f"letter {letter} needs at least {letter.index + 1} strands, word has {self.n}")

    @classmethod
    def of(cls, n: int, *indices: int) -> "BraidWord":
        """BraidWord.of(4, 1, 3, -2) = b1 b3 B2."""
        return cls(n, tuple(Letter(abs(i), 1 if i > 0 else -1) for i in indices))

    @classmethod
    def parse(cls, text: str, n: int) -> "BraidWord":
        """Reads 'b2 b1 B3': bN is beta_{N,N+1}, BN its inverse."""
        letters = []
        for token in text.split():
            match = _LETTER_RE.match(token)
            if not match:
                raise ArgumentError(f"malformed braid letter {token!r}")
            letters.append(Letter(int(match.group(2)), 1 if match.group(1) == "b" else -1))
        return cls(n, tuple(letters))

    @classmethod
    def from_history(cls, items: list[str], n: int) -> "BraidWord":
        letters = []
        for item in items:
            match = _HISTORY_RE.match(item)
            if not match:
                raise ArgumentError(f"malformed history letter {item!r}")
            letters.append(Letter(int(match.group(2)), 1 if match.group(1) == "+" else -1))
        return cls(n, tuple(letters))

    def to_history(self) -> list[str]:
        return [f"b{'+' if l.exp > 0 else '-'}{l.index}" for l in self.letters]

    def inverse(self) -> "BraidWord":
        return BraidWord(self.n, tuple(l.inverse() for l in reversed(self.letters)))

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        if self.n != other.n:
            raise ArgumentError(f"cannot concatenate words on {self.n} and {other.n} strands")
        return BraidWord(self.n, self.letters + other.letters)

    def __pow__(self, m: int) -> "BraidWord":
        if m < 0:
            return self.inverse() ** (-m)
        return BraidWord(self.n, self.letters * m)

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __str__(self):
        return " ".join(str(l) for l in self.letters)


def central_braid(n: int) -> BraidWord:
    """(b1 b2 ... b_{n-1})^n, the full counter-clockwise rotation."""
    if n < 2:
        raise ArgumentError(f"central braid needs n >= 2, got {n}")
    return BraidWord.of(n, *range(1, n)) ** n
