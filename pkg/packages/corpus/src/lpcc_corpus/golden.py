"""Golden `.lpcc` files shipped with the package."""

from importlib import resources

from lpcc_core.exceptions import ValidationError
from lpcc_corpus.entries import CorpusId, get_entry


def golden_ids() -> tuple[CorpusId, ...]:
    """Entries with a problem file (the linear ones)."""
    return tuple(c for c in CorpusId if get_entry(c).is_linear)


def golden_name(entry_id: str | CorpusId) -> str:
    return f"{get_entry(entry_id).id.value.lower()}.lpcc"


def golden_text(entry_id: str | CorpusId) -> str:
    """
    Contents of the golden file for a linear entry.

    Raises:
        ValidationError: unknown id or an entry without a problem file
    """
    entry = get_entry(entry_id)
    if not entry.is_linear:
        raise ValidationError("id", f"{entry.id} is a black-box instance with no problem file")
    return resources.files("lpcc_corpus").joinpath("data", golden_name(entry.id)).read_text(
        encoding="utf-8"
    )
