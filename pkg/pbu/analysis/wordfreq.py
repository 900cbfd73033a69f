'''
wordfreq
========

The word-frequency pipeline: tokenize, lowercase, filter by length and
stopwords, optionally truncate with the Porter stemmer, and count.

.. autoclass:: MiningConfig
.. autoclass:: FrequencyTable
.. autofunction:: tokenize_and_count
.. autofunction:: porter_stem
'''
from collections import Counter
from dataclasses import dataclass
import re
from nltk.stem.porter import PorterStemmer
from pbu.errors import UnexpectedValueError

STEMMERS = ('none', 'porter')
_TOKEN = re.compile(r'[^\W_]+')
_PORTER = PorterStemmer(mode=PorterStemmer.ORIGINAL_ALGORITHM)


@dataclass(frozen=True)
class MiningConfig:
    '''
    Args:
        stopwords (set, optional): Words to drop, matched case-insensitively.
        min_token_length (int, optional): Shorter tokens are dropped.
        stemmer (str, optional): ``none`` or ``porter``.
    '''
    stopwords: frozenset = frozenset()
    min_token_length: int = 1
    stemmer: str = 'none'

    def __post_init__(self):
        object.__setattr__(self, 'stopwords',
                           frozenset(w.lower() for w in self.stopwords))
        if (isinstance(self.min_token_length, bool)
                or not isinstance(self.min_token_length, int)
                or self.min_token_length < 1):
            raise UnexpectedValueError('min_token_length has value of {!r}.  '
                'Expected an integer >= 1'.format(self.min_token_length))
        if self.stemmer not in STEMMERS:
            raise UnexpectedValueError('stemmer has value of {!r}.  Expected '
                'one of {}'.format(self.stemmer, ','.join(STEMMERS)))


@dataclass(frozen=True)
class FrequencyTable:
    '''
    ``(token, count)`` rows, most frequent first, ties in token order.
    '''
    rows: tuple = ()

    @property
    def total(self):
        return sum(count for _, count in self.rows)

    def top(self, n):
        return FrequencyTable(self.rows[:n])

    def __len__(self):
        return len(self.rows)

    def __iter__(self):
        return iter(self.rows)


def porter_stem(token):
    '''
    Truncates a lowercase token with the original Porter algorithm.

    Examples:
        >>> porter_stem('caresses')
        'caress'
        >>> porter_stem('ponies')
        'poni'
    '''
    if not token:
        return ''
    return _PORTER.stem(token)


def tokenize_and_count(text, config=None):
    '''
    Counts the words of a text.

    Args:
        text (str): The corpus text.
        config (MiningConfig, optional): Filters and stemming.

    Returns:
        :obj:`FrequencyTable`

    Examples:
        >>> table = tokenize_and_count('The process, the PROCESS!',
        ...     MiningConfig({'the'}, min_token_length=2))
        >>> list(table)
        [('process', 2)]
    '''
    config = config or MiningConfig()
    counts = Counter()
    for token in _TOKEN.findall(text):
        token = token.lower()
        if len(token) < config.min_token_length or token in config.stopwords:
            continue
        if config.stemmer == 'porter':
            token = porter_stem(token)
        counts[token] += 1
    return FrequencyTable(tuple(sorted(counts.items(),
                                       key=lambda i: (-i[1], i[0]))))
