from pbu.analysis.wordfreq import *
from pbu.errors import *
from pbu.formats.corpus import CorpusReader, read_lines
import os, pytest, random

TEST_FILES = os.path.join(os.path.dirname(os.path.realpath(__file__)),
                          '..', 'test_files')
WORDS = ('peer', 'review', 'reviews', 'inspection', 'the', 'a', 'of',
         'process', 'défaut', 'x1', 'moderator')
SEPARATORS = (' ', ', ', '. ', '\n', '\t', ' - ', '_', '!? ', '  ')


def test_wordfreq_example():
    table = tokenize_and_count('The process, the PROCESS!',
                               MiningConfig({'the'}, min_token_length=2))
    assert list(table) == [('process', 2)]
    assert table.total == 2


def test_wordfreq_default_config():
    table = tokenize_and_count('b a b, c; a b')
    assert list(table) == [('b', 3), ('a', 2), ('c', 1)]


def test_wordfreq_stopwords_case_insensitive():
    table = tokenize_and_count('The review of THE product',
                               MiningConfig({'The', 'OF'}))
    assert dict(table) == {'review': 1, 'product': 1}


def test_wordfreq_min_length():
    table = tokenize_and_count('a an and also', MiningConfig(
        min_token_length=3))
    assert [token for token, _ in table] == ['also', 'and']


def test_wordfreq_unicode_and_underscores():
    table = tokenize_and_count('défaut_critique DÉFAUT x1')
    assert dict(table) == {'défaut': 2, 'critique': 1, 'x1': 1}


def test_wordfreq_top():
    table = tokenize_and_count('c c c b b a')
    assert list(table.top(2)) == [('c', 3), ('b', 2)]
    assert len(table.top(10)) == 3


def test_wordfreq_empty_text():
    assert len(tokenize_and_count('')) == 0


@pytest.mark.parametrize('word, stem', [
    ('caresses', 'caress'),
    ('ponies', 'poni'),
    ('ties', 'ti'),
    ('cats', 'cat'),
    ('feed', 'feed'),
    ('agreed', 'agre'),
    ('plastered', 'plaster'),
    ('motoring', 'motor'),
    ('sing', 'sing'),
    ('hopping', 'hop'),
    ('filing', 'file'),
    ('happy', 'happi'),
    ('relational', 'relat'),
    ('generalization', 'gener'),
    ('adjustable', 'adjust'),
    ('probate', 'probat'),
    ('controlling', 'control'),
    ('processing', 'process'),
    ('processes', 'process'),
])
def test_wordfreq_porter_stem(word, stem):
    assert porter_stem(word) == stem


def test_wordfreq_porter_stem_empty():
    assert porter_stem('') == ''


def test_wordfreq_porter_merges_counts():
    table = tokenize_and_count('review reviews reviewing reviewed',
                               MiningConfig(stemmer='porter'))
    assert list(table) == [('review', 4)]


@pytest.mark.parametrize('kwargs', [
    {'min_token_length': 0},
    {'min_token_length': '2'},
    {'min_token_length': True},
    {'stemmer': 'snowball'},
])
def test_wordfreq_config_unexpectedvalueerror(kwargs):
    with pytest.raises(UnexpectedValueError):
        MiningConfig(**kwargs)


@pytest.mark.parametrize('seed', range(100))
def test_wordfreq_counts_are_conserved(seed):
    rng = random.Random(seed)
    words = [rng.choice(WORDS) for _ in range(rng.randint(0, 60))]
    text = ''.join(w + rng.choice(SEPARATORS) for w in words)
    plain = tokenize_and_count(text)
    assert plain.total == len(words)
    assert dict(plain) == {w: words.count(w) for w in set(words)}
    stemmed = tokenize_and_count(text, MiningConfig(stemmer='porter'))
    assert stemmed.total == plain.total
    filtered = tokenize_and_count(text, MiningConfig({'the', 'of'}, 2))
    assert filtered.total == sum(1 for w in words
                                 if w not in ('the', 'of') and len(w) >= 2)
    assert [count for _, count in plain] == sorted(
        (count for _, count in plain), reverse=True)


@pytest.mark.datafiles(
    os.path.join(TEST_FILES, 'corpus'),
    os.path.join(TEST_FILES, 'stopwords.txt'),
    keep_top_dir=True)
def test_wordfreq_corpus_files(datafiles):
    path = str(datafiles)
    text = CorpusReader(os.path.join(path, 'corpus')).text()
    stopwords = read_lines(os.path.join(path, 'stopwords.txt'))
    table = dict(tokenize_and_count(text, MiningConfig(stopwords, 2)))
    assert table['refer'] == 13
    assert table['process'] == 13
    assert table['area'] == 13
    assert 'the' not in table
    assert 'not' not in table
