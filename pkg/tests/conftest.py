"""Shared fixtures: a small bilingual corpus and models trained on it.

Session scope keeps the suite fast; nothing here mutates the fixtures.
"""

import pytest

from lexforge import bilstm as bilstm_mod
from lexforge import corpus as corpus_mod
from lexforge import features as features_mod
from lexforge import logreg as logreg_mod

TOY_HINDI = """
gulaam abhilaasha khushi zindagi dost pyaar kahani gaana paani
ghar raat baat aadmi aurat bachcha ladka ladki kitab kalam kaam
karna karta karti karte khana khata sona sota jaana jaata dekhna
dekhta sunna sunta bolna bolta likhna likhta padhna padhta accha
acchi acche bada badi bade chhota chhoti lekin kyunki shukriya
""".split()

TOY_ENGLISH = """
literally computer window water bottle garden house family friend
school teacher student morning evening yesterday tomorrow quickly
slowly running walking talking sleeping reading writing playing
working thinking beautiful wonderful different important possible
question answer problem moment minute people world country street
children brother sister mother father kitchen
""".split()


@pytest.fixture(scope="session")
def toy_corpus():
    return corpus_mod.build_corpus(TOY_HINDI, TOY_ENGLISH, seed=7)


@pytest.fixture(scope="session")
def toy_split(toy_corpus):
    return corpus_mod.split_corpus(toy_corpus, 0.25, seed=7)


@pytest.fixture(scope="session")
def toy_vocab(toy_split):
    return features_mod.build_vocabulary(toy_split.train)


@pytest.fixture(scope="session")
def toy_logreg(toy_split, toy_vocab):
    hp = logreg_mod.LogRegHyperparams(epochs=12, seed=1)
    model, _ = logreg_mod.train_logreg(toy_split.train, toy_vocab, hp)
    return model


@pytest.fixture(scope="session")
def toy_bilstm(toy_split):
    hp = bilstm_mod.BiLSTMHyperparams(d=6, h=8, epochs=8, seed=3)
    model, _ = bilstm_mod.train_bilstm(toy_split.train, hp)
    return model
