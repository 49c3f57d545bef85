"""Reference oracle for language-tag well-formedness.

Deliberately independent of the package's parser: the grammar is
transcribed from the tag ABNF into one anchored regular expression, so the
two implementations share no code or structure.  ``re.ASCII`` keeps the
character classes byte-oriented under case-insensitive matching.
"""

import re

# Irregular legacy tags that do not fit the grammar but are valid tags.
IRREGULAR_TAGS = (
    "en-GB-oed",
    "i-ami",
    "i-bnn",
    "i-default",
    "i-enochian",
    "i-hak",
    "i-klingon",
    "i-lux",
    "i-mingo",
    "i-navajo",
    "i-pwn",
    "i-tao",
    "i-tay",
    "i-tsu",
    "sgn-BE-FR",
    "sgn-BE-NL",
    "sgn-CH-DE",
)

_IRREGULAR_ALT = "|".join(re.escape(tag) for tag in IRREGULAR_TAGS)

WELLFORMED_RE = re.compile(
    r"""^(?:
        (?:""" + _IRREGULAR_ALT + r""")                      # irregular legacy tags
        |
        (?:                                                  # ordinary tag
            (?:
                [a-z]{2,3}(?:-[a-z]{3}){0,3}                 # language + extlangs
                | [a-z]{4}
                | [a-z]{5,8}
            )
            (?:-[a-z]{4})?                                   # script
            (?:-(?:[a-z]{2}|[0-9]{3}))?                      # region
            (?:-(?:[0-9][a-z0-9]{3}|[a-z0-9]{5,8}))*         # variants
            (?:-[0-9a-wy-z](?:-[a-z0-9]{2,8})+)*             # extensions
            (?:-x(?:-[a-z0-9]{1,8})+)?                       # private use
        )
        |
        x(?:-[a-z0-9]{1,8})+                                 # private-use-only tag
    )$""",
    re.IGNORECASE | re.VERBOSE | re.ASCII,
)


def oracle_is_well_formed(text: str) -> bool:
    return bool(WELLFORMED_RE.match(text))
