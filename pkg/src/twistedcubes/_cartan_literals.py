"""Hand-checked Cartan matrix literals for every admissible type of rank <= 9.

Kept separate from the programmatic generator so a transcription error in one
cannot silently propagate to the other; the package asserts agreement at
import time.
"""

_LITERAL_TABLES = {
    "A1": (
        (2,),
    ),
    "A2": (
        (2, -1,),
        (-1, 2,),
    ),
    "A3": (
        (2, -1, 0,),
        (-1, 2, -1,),
        (0, -1, 2,),
    ),
    "A4": (
        (2, -1, 0, 0,),
        (-1, 2, -1, 0,),
        (0, -1, 2, -1,),
        (0, 0, -1, 2,),
    ),
    "A5": (
        (2, -1, 0, 0, 0,),
        (-1, 2, -1, 0, 0,),
        (0, -1, 2, -1, 0,),
        (0, 0, -1, 2, -1,),
        (0, 0, 0, -1, 2,),
    ),
    "A6": (
        (2, -1, 0, 0, 0, 0,),
        (-1, 2, -1, 0, 0, 0,),
        (0, -1, 2, -1, 0, 0,),
        (0, 0, -1, 2, -1, 0,),
        (0, 0, 0, -1, 2, -1,),
        (0, 0, 0, 0, -1, 2,),
    ),
    "A7": (
        (2, -1, 0, 0, 0, 0, 0,),
        (-1, 2, -1, 0, 0, 0, 0,),
        (0, -1, 2, -1, 0, 0, 0,),
        (0, 0, -1, 2, -1, 0, 0,),
        (0, 0, 0, -1, 2, -1, 0,),
        (0, 0, 0, 0, -1, 2, -1,),
        (0, 0, 0, 0, 0, -1, 2,),
    ),
    "A8": (
        (2, -1, 0, 0, 0, 0, 0, 0,),
        (-1, 2, -1, 0, 0, 0, 0, 0,),
        (0, -1, 2, -1, 0, 0, 0, 0,),
        (0, 0, -1, 2, -1, 0, 0, 0,),
        (0, 0, 0, -1, 2, -1, 0, 0,),
        (0, 0, 0, 0, -1, 2, -1, 0,),
        (0, 0, 0, 0, 0, -1, 2, -1,),
        (0, 0, 0, 0, 0, 0, -1, 2,),
    ),
    "A9": (
        (2, -1, 0, 0, 0, 0, 0, 0, 0,),
        (-1, 2, -1, 0, 0, 0, 0, 0, 0,),
        (0, -1, 2, -1, 0, 0, 0, 0, 0,),
        (0, 0, -1, 2, -1, 0, 0, 0, 0,),
        (0, 0, 0, -1, 2, -1, 0, 0, 0,),
        (0, 0, 0, 0, -1, 2, -1, 0, 0,),
        (0, 0, 0, 0, 0, -1, 2, -1, 0,),
        (0, 0, 0, 0, 0, 0, -1, 2, -1,),
        (0, 0, 0, 0, 0, 0, 0, -1, 2,),
    ),
    "B2": (
        (2, -2,),
        (-1, 2,),
    ),
    "B3": (
        (2, -1, 0,),
        (-1, 2, -2,),
        (0, -1, 2,),
    ),
    "B4": (
        (2, -1, 0, 0,),
        (-1, 2, -1, 0,),
        (0, -1, 2, -2,),
        (0, 0, -1, 2,),
    ),
    "B5": (
        (2, -1, 0, 0, 0,),
        (-1, 2, -1, 0, 0,),
        (0, -1, 2, -1, 0,),
        (0, 0, -1, 2, -2,),
        (0, 0, 0, -1, 2,),
    ),
    "B6": (
        (2, -1, 0, 0, 0, 0,),
        (-1, 2, -1, 0, 0, 0,),
        (0, -1, 2, -1, 0, 0,),
        (0, 0, -1, 2, -1, 0,),
        (0, 0, 0, -1, 2, -2,),
        (0, 0, 0, 0, -1, 2,),
    ),
    "B7": (
        (2, -1, 0, 0, 0, 0, 0,),
        (-1, 2, -1, 0, 0, 0, 0,),
        (0, -1, 2, -1, 0, 0, 0,),
        (0, 0, -1, 2, -1, 0, 0,),
        (0, 0, 0, -1, 2, -1, 0,),
        (0, 0, 0, 0, -1, 2, -2,),
        (0, 0, 0, 0, 0, -1, 2,),
    ),
    "B8": (
        (2, -1, 0, 0, 0, 0, 0, 0,),
        (-1, 2, -1, 0, 0, 0, 0, 0,),
        (0, -1, 2, -1, 0, 0, 0, 0,),
        (0, 0, -1, 2, -1, 0, 0, 0,),
        (0, 0, 0, -1, 2, -1, 0, 0,),
        (0, 0, 0, 0, -1, 2, -1, 0,),
        (0, 0, 0, 0, 0, -1, 2, -2,),
        (0, 0, 0, 0, 0, 0, -1, 2,),
    ),
    "B9": (
        (2, -1, 0, 0, 0, 0, 0, 0, 0,),
        (-1, 2, -1, 0, 0, 0, 0, 0, 0,),
        (0, -1, 2, -1, 0, 0, 0, 0, 0,),
        (0, 0, -1, 2, -1, 0, 0, 0, 0,),
        (0, 0, 0, -1, 2, -1, 0, 0, 0,),
        (0, 0, 0, 0, -1, 2, -1, 0, 0,),
        (0, 0, 0, 0, 0, -1, 2, -1, 0,),
        (0, 0, 0, 0, 0, 0, -1, 2, -2,),
        (0, 0, 0, 0, 0, 0, 0, -1, 2,),
    ),
    "C3": (
        (2, -1, 0,),
        (-1, 2, -1,),
        (0, -2, 2,),
    ),
    "C4": (
        (2, -1, 0, 0,),
        (-1, 2, -1, 0,),
        (0, -1, 2, -1,),
        (0, 0, -2, 2,),
    ),
    "C5": (
        (2, -1, 0, 0, 0,),
        (-1, 2, -1, 0, 0,),
        (0, -1, 2, -1, 0,),
        (0, 0, -1, 2, -1,),
        (0, 0, 0, -2, 2,),
    ),
    "C6": (
        (2, -1, 0, 0, 0, 0,),
        (-1, 2, -1, 0, 0, 0,),
        (0, -1, 2, -1, 0, 0,),
        (0, 0, -1, 2, -1, 0,),
        (0, 0, 0, -1, 2, -1,),
        (0, 0, 0, 0, -2, 2,),
    ),
    "C7": (
        (2, -1, 0, 0, 0, 0, 0,),
        (-1, 2, -1, 0, 0, 0, 0,),
        (0, -1, 2, -1, 0, 0, 0,),
        (0, 0, -1, 2, -1, 0, 0,),
        (0, 0, 0, -1, 2, -1, 0,),
        (0, 0, 0, 0, -1, 2, -1,),
        (0, 0, 0, 0, 0, -2, 2,),
    ),
    "C8": (
        (2, -1, 0, 0, 0, 0, 0, 0,),
        (-1, 2, -1, 0, 0, 0, 0, 0,),
        (0, -1, 2, -1, 0, 0, 0, 0,),
        (0, 0, -1, 2, -1, 0, 0, 0,),
        (0, 0, 0, -1, 2, -1, 0, 0,),
        (0, 0, 0, 0, -1, 2, -1, 0,),
        (0, 0, 0, 0, 0, -1, 2, -1,),
        (0, 0, 0, 0, 0, 0, -2, 2,),
    ),
    "C9": (
        (2, -1, 0, 0, 0, 0, 0, 0, 0,),
        (-1, 2, -1, 0, 0, 0, 0, 0, 0,),
        (0, -1, 2, -1, 0, 0, 0, 0, 0,),
        (0, 0, -1, 2, -1, 0, 0, 0, 0,),
        (0, 0, 0, -1, 2, -1, 0, 0, 0,),
        (0, 0, 0, 0, -1, 2, -1, 0, 0,),
        (0, 0, 0, 0, 0, -1, 2, -1, 0,),
        (0, 0, 0, 0, 0, 0, -1, 2, -1,),
        (0, 0, 0, 0, 0, 0, 0, -2, 2,),
    ),
    "D4": (
        (2, -1, 0, 0,),
        (-1, 2, -1, -1,),
        (0, -1, 2, 0,),
        (0, -1, 0, 2,),
    ),
    "D5": (
        (2, -1, 0, 0, 0,),
        (-1, 2, -1, 0, 0,),
        (0, -1, 2, -1, -1,),
        (0, 0, -1, 2, 0,),
        (0, 0, -1, 0, 2,),
    ),
    "D6": (
        (2, -1, 0, 0, 0, 0,),
        (-1, 2, -1, 0, 0, 0,),
        (0, -1, 2, -1, 0, 0,),
        (0, 0, -1, 2, -1, -1,),
        (0, 0, 0, -1, 2, 0,),
        (0, 0, 0, -1, 0, 2,),
    ),
    "D7": (
        (2, -1, 0, 0, 0, 0, 0,),
        (-1, 2, -1, 0, 0, 0, 0,),
        (0, -1, 2, -1, 0, 0, 0,),
        (0, 0, -1, 2, -1, 0, 0,),
        (0, 0, 0, -1, 2, -1, -1,),
        (0, 0, 0, 0, -1, 2, 0,),
        (0, 0, 0, 0, -1, 0, 2,),
    ),
    "D8": (
        (2, -1, 0, 0, 0, 0, 0, 0,),
        (-1, 2, -1, 0, 0, 0, 0, 0,),
        (0, -1, 2, -1, 0, 0, 0, 0,),
        (0, 0, -1, 2, -1, 0, 0, 0,),
        (0, 0, 0, -1, 2, -1, 0, 0,),
        (0, 0, 0, 0, -1, 2, -1, -1,),
        (0, 0, 0, 0, 0, -1, 2, 0,),
        (0, 0, 0, 0, 0, -1, 0, 2,),
    ),
    "D9": (
        (2, -1, 0, 0, 0, 0, 0, 0, 0,),
        (-1, 2, -1, 0, 0, 0, 0, 0, 0,),
        (0, -1, 2, -1, 0, 0, 0, 0, 0,),
        (0, 0, -1, 2, -1, 0, 0, 0, 0,),
        (0, 0, 0, -1, 2, -1, 0, 0, 0,),
        (0, 0, 0, 0, -1, 2, -1, 0, 0,),
        (0, 0, 0, 0, 0, -1, 2, -1, -1,),
        (0, 0, 0, 0, 0, 0, -1, 2, 0,),
        (0, 0, 0, 0, 0, 0, -1, 0, 2,),
    ),
    "E6": (
        (2, 0, -1, 0, 0, 0,),
        (0, 2, 0, -1, 0, 0,),
        (-1, 0, 2, -1, 0, 0,),
        (0, -1, -1, 2, -1, 0,),
        (0, 0, 0, -1, 2, -1,),
        (0, 0, 0, 0, -1, 2,),
    ),
    "E7": (
        (2, 0, -1, 0, 0, 0, 0,),
        (0, 2, 0, -1, 0, 0, 0,),
        (-1, 0, 2, -1, 0, 0, 0,),
        (0, -1, -1, 2, -1, 0, 0,),
        (0, 0, 0, -1, 2, -1, 0,),
        (0, 0, 0, 0, -1, 2, -1,),
        (0, 0, 0, 0, 0, -1, 2,),
    ),
    "E8": (
        (2, 0, -1, 0, 0, 0, 0, 0,),
        (0, 2, 0, -1, 0, 0, 0, 0,),
        (-1, 0, 2, -1, 0, 0, 0, 0,),
        (0, -1, -1, 2, -1, 0, 0, 0,),
        (0, 0, 0, -1, 2, -1, 0, 0,),
        (0, 0, 0, 0, -1, 2, -1, 0,),
        (0, 0, 0, 0, 0, -1, 2, -1,),
        (0, 0, 0, 0, 0, 0, -1, 2,),
    ),
    "F4": (
        (2, -1, 0, 0,),
        (-1, 2, -2, 0,),
        (0, -1, 2, -1,),
        (0, 0, -1, 2,),
    ),
    "G2": (
        (2, -1,),
        (-3, 2,),
    ),
}
