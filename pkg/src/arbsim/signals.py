"""Bit-exact words, logic levels, and the shared width configuration.

Logic is strictly two-valued: a level is a plain ``bool`` (``HIGH``/``LOW``).
A :class:`Word` is an immutable fixed-width bus value that renders to and
parses from a binary string such as ``"1010"``.
"""

from __future__ import annotations

from dataclasses import dataclass

Level = bool
HIGH: Level = True
LOW: Level = False


class WordParseError(ValueError):
    """Raised when a binary-string literal cannot become a Word."""


@dataclass(frozen=True, slots=True)
class Word:
    """Fixed-width unsigned bus value, most-significant bit first."""

    width: int
    value: int

    def __post_init__(self) -> None:
        if self.width < 1:
            raise ValueError(f"word width must be positive, got {self.width}")
        if not 0 <= self.value < (1 << self.width):
            raise ValueError(
                f"value {self.value} out of range for width {self.width}"
            )

    @classmethod
    def zeros(cls, width: int) -> "Word":
        return cls(width, 0)

    @property
    def bits(self) -> tuple[Level, ...]:
        """Levels of the word, most-significant first."""
        return tuple(c == "1" for c in self.render())

    def render(self) -> str:
        return format(self.value, f"0{self.width}b")

    def __str__(self) -> str:
        return self.render()


def parse_word(text: str, width: int) -> Word:
    """Parse a binary string of exactly ``width`` characters from {0,1}.

    Errors name the offending position (0-based) or the length mismatch.
    """
    if len(text) != width:
        raise WordParseError(
            f"expected {width} binary digits, got {len(text)}: {text!r}"
        )
    for pos, ch in enumerate(text):
        if ch not in "01":
            raise WordParseError(
                f"illegal character {ch!r} at position {pos} in {text!r}"
            )
    return Word(width, int(text, 2))


def word_to_index(w: Word) -> int:
    """Unsigned big-endian interpretation of a word, used as a memory index."""
    return w.value


@dataclass(frozen=True, slots=True)
class Params:
    """Bus widths and the output-register option shared by all blocks."""

    addr_width: int
    data_width: int
    registered_output: bool = False

    def __post_init__(self) -> None:
        if self.addr_width < 1:
            raise ValueError(f"addr_width must be >= 1, got {self.addr_width}")
        if self.data_width < 1:
            raise ValueError(f"data_width must be >= 1, got {self.data_width}")

    def ram_depth(self) -> int:
        return 1 << self.addr_width

    def zero_addr(self) -> Word:
        return Word.zeros(self.addr_width)

    def zero_data(self) -> Word:
        return Word.zeros(self.data_width)
