# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Helper functions for vertex sets and environment configuration.

A vertex set is a plain integer used as a bit mask: the vertex with label
``v`` owns the bit ``1 << (v - 1)``.

>>> from pybei.helpers import vertex_set, labels_of, format_vertex_set
>>> mask = vertex_set([2, 4, 5])
>>> labels_of(mask)
[2, 4, 5]
>>> format_vertex_set(mask)
'{2,4,5}'
"""
import os

FIELDS_ENV = 'BEI_FIELDS'
MEMO_MAX_ENV = 'BEI_MEMO_MAX'
EXTENDED_SURVEY_ENV = 'BEI_EXTENDED_SURVEY'

RATIONALS = 0
DEFAULT_FIELDS = (RATIONALS, 2, 3)

_RATIONAL_TOKENS = ('q', 'Q', '0')


def is_int_type(val):
    """Return True if `val` is of integer type (but not a boolean)."""
    return isinstance(val, int) and not isinstance(val, bool)


def bit(label):
    """Return the mask of the single vertex `label`."""
    return 1 << (label - 1)


def label_of(single_bit):
    """Return the label of a mask holding exactly one vertex."""
    return single_bit.bit_length()


def vertex_set(labels):
    """Return the mask of the given vertex labels."""
    mask = 0
    for label in labels:
        mask |= 1 << (label - 1)
    return mask


def as_vertex_set(value):
    """Accept either a mask or an iterable of labels and return a mask."""
    if is_int_type(value):
        if value < 0:
            raise ValueError('Vertex set mask must be non-negative: %d' % value)
        return value
    return vertex_set(value)


def iter_bits(mask):
    """Yield the single-vertex masks of `mask` in ascending label order."""
    while mask:
        low = mask & -mask
        yield low
        mask ^= low


def labels_of(mask):
    """Return the labels of `mask` in ascending order."""
    return [low.bit_length() for low in iter_bits(mask)]


def popcount(mask):
    """Return the number of vertices in `mask`."""
    return bin(mask).count('1')


def lowest_label(mask):
    """Return the smallest label in a non-empty mask."""
    return (mask & -mask).bit_length()


def set_sort_key(mask):
    """Sort key ordering vertex sets by size, then lexicographically."""
    return popcount(mask), labels_of(mask)


def sorted_sets(masks):
    """Return `masks` sorted by `set_sort_key`."""
    return sorted(masks, key=set_sort_key)


def format_vertex_set(mask):
    return '{%s}' % ','.join(str(label) for label in labels_of(mask))


def parse_fields(text):
    """Parse a comma separated field list such as ``'q,2,3'``.

    Args:
        text: tokens `q` (or `Q`, `0`) for the rationals, or a prime `p`
            for the field with `p` elements.

    Returns:
        A tuple of field characteristics, 0 standing for the rationals.

    Raises:
        ValueError: if a token is neither `q` nor a prime number.
    """
    fields = []
    for token in text.split(','):
        token = token.strip()
        if not token:
            continue
        if token in _RATIONAL_TOKENS:
            characteristic = RATIONALS
        else:
            try:
                characteristic = int(token)
            except ValueError:
                raise ValueError('Invalid field token: %r' % token)
            if not is_prime(characteristic):
                raise ValueError('Field characteristic %d is not a prime'
                                 % characteristic)
        if characteristic not in fields:
            fields.append(characteristic)
    if not fields:
        raise ValueError('Empty field list: %r' % text)
    return tuple(fields)


def field_name(characteristic):
    """Return the display name of a field, 'Q' or 'GF(p)'."""
    if characteristic == RATIONALS:
        return 'Q'
    return 'GF(%d)' % characteristic


def field_from_name(name):
    """Inverse of `field_name`."""
    if name == 'Q':
        return RATIONALS
    if name.startswith('GF(') and name.endswith(')'):
        return int(name[3:-1])
    raise ValueError('Unknown field name: %r' % name)


def is_prime(number):
    if number < 2:
        return False
    divisor = 2
    while divisor * divisor <= number:
        if number % divisor == 0:
            return False
        divisor += 1
    return True


def fields_from_environment():
    """Return the field list configured in ``BEI_FIELDS`` or the default."""
    text = os.environ.get(FIELDS_ENV)
    if text is None or not text.strip():
        return DEFAULT_FIELDS
    return parse_fields(text)


def memo_max_from_environment():
    """Return the memo cap from ``BEI_MEMO_MAX``; 0 means unbounded."""
    text = os.environ.get(MEMO_MAX_ENV, '').strip()
    if not text:
        return 0
    try:
        value = int(text)
    except ValueError:
        raise ValueError('%s must be an integer, got %r'
                         % (MEMO_MAX_ENV, text))
    if value < 0:
        raise ValueError('%s must be non-negative, got %d'
                         % (MEMO_MAX_ENV, value))
    return value


def extended_survey_enabled():
    """Return True if the n = 7 theorem survey shall run in the tests."""
    return os.environ.get(EXTENDED_SURVEY_ENV, '0') not in ('', '0')
