"""
Shared document-format constants/helpers for surfbundles output.

Kept tiny and dependency-free. Output must be byte-identical for identical input, so JSON is
written with the key order the producers chose (never a set, never a dict built from one) and
rationals always as "p/q" strings, never floats. Non-ASCII text (χ, ²) goes out as JSON escapes, so the
bytes do not depend on the console encoding.
"""
import json
import os
import sys
import tempfile
from fractions import Fraction

# Document format version, emitted as `schema_version` in every JSON document.
SCHEMA_VERSION = "1"


def rational(value):
    """Exact text form of an int or Fraction: "2", "2/3". None stays None (an empty cell)."""
    if value is None:
        return None
    return str(Fraction(value))


def dumps(document) -> str:
    return json.dumps(document, indent=2) + '\n'


def write_document(text: str, out=None):
    """Write `text` to `out`, or to standard output when `out` is None or '-'.

    A file target is written to a temp file beside it and moved into place with os.replace, so a
    reader never sees a half-written document and an interrupted run leaves the old one intact.
    """
    if out is None or out == '-':
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    target = os.path.abspath(out)
    directory = os.path.dirname(target)
    fd, tmp_path = tempfile.mkstemp(prefix='.%s.' % os.path.basename(target), suffix='.tmp', dir=directory)
    try:
        with os.fdopen(fd, 'w', encoding='utf-8', newline='') as handle:
            handle.write(text)
        os.replace(tmp_path, target)
    except BaseException:
        try:
            os.remove(tmp_path)
        except OSError:
            pass
        raise
