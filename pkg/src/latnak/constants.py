from functools import lru_cache

PACKAGE_NAME = "latnak"

CONFIG_FILENAME = "latnak.toml"

DEFAULT_PRIME = 32003

PRIME_BOUND = 2**31

ISO_CAP = 8

MAX_DIM = 60

PAIRS_CSV_HEADER = "# latnak pairs v1"

PAIRS_COLUMNS = ("p", "q", "r", "case", "n", "l", "l_plus_1")

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_AXIOM_FAILURE = 2
EXIT_REFUTED = 3
EXIT_PRECONDITION = 4


@lru_cache(maxsize=1)
def get_field_kinds() -> tuple[str, ...]:
    """
    Get the supported coefficient field kinds
    """

    return ("rationals", "prime")


@lru_cache(maxsize=1)
def get_output_formats() -> tuple[str, ...]:
    """
    Get the supported output formats
    """

    return ("json", "csv", "text")


FIELD_KINDS = get_field_kinds()

OUTPUT_FORMATS = get_output_formats()
