"""Separating Function Families.

Both families split the variables into contiguous sections and output 1
iff at least one section is "good":

- paired sections (k >= 0): 2k+1 sections of 2k+1 variables. Local
  variables x_{2i-1}, x_{2i} form pair i (1 <= i <= k). A section is good
  when exactly one pair is fully set and every other local bit is 0, or
  when only its last variable x_{2k+1} is set. s(f) = 2k+1 and
  bs(f) = (2k+1)(k+1).
- Rubinstein (m even): m intervals of m variables; an interval is good
  when its set variables are exactly one aligned pair {2j-1, 2j}.
  2 bs(f) = s(f)^2 = m^2. The intervals are joined by OR.
"""

from src.domain.entities.boolean_function import BlockSet, Input, SectionRule, StructuredFunction
from src.domain.exceptions import DomainValidationError


def _pair_patterns(width: int) -> set[int]:
    return {0b11 << (2 * i) for i in range(width // 2)}


def _from_rule(rule: SectionRule, name: str) -> StructuredFunction:
    return StructuredFunction(
        n=rule.n,
        evaluator=lambda w: rule.evaluate_index(w.index),
        section_rule=rule,
        name=name,
    )


def paired_sections_rule(k: int) -> SectionRule:
    if k < 0:
        raise DomainValidationError(f"k must be non-negative, got {k}")
    width = 2 * k + 1
    patterns = _pair_patterns(2 * k) | {1 << (2 * k)}
    return SectionRule(width=width, section_count=width, good_patterns=frozenset(patterns))


def paired_sections_family(k: int) -> StructuredFunction:
    """Build the paired-sections function on (2k+1)^2 variables."""
    return _from_rule(paired_sections_rule(k), name=f"paired-sections(k={k})")


def paired_sections_witness_blocks(k: int) -> BlockSet:
    """Return the (2k+1)(k+1) blocks that flip the function at 0...0.

    Per section: its k pairs followed by its last variable.
    """
    if k < 0:
        raise DomainValidationError(f"k must be non-negative, got {k}")
    width = 2 * k + 1
    blocks: list[frozenset[int]] = []
    for t in range(width):
        offset = t * width
        for i in range(1, k + 1):
            blocks.append(frozenset({offset + 2 * i - 1, offset + 2 * i}))
        blocks.append(frozenset({offset + width}))
    return BlockSet(blocks=tuple(blocks), witness=Input.zeros(width * width))


def rubinstein_rule(m: int) -> SectionRule:
    if m < 2 or m % 2:
        raise DomainValidationError(f"m must be a positive even integer, got {m}")
    return SectionRule(width=m, section_count=m, good_patterns=frozenset(_pair_patterns(m)))


def rubinstein_family(m: int) -> StructuredFunction:
    """Build Rubinstein's function on m^2 variables."""
    return _from_rule(rubinstein_rule(m), name=f"rubinstein(m={m})")
