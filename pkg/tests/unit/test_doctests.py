# SPDX-License-Identifier: MPL-2.0
import doctest

import pytest

from metta_kb.atoms import model
from metta_kb.reader import parser, tokenizer
from metta_kb.unify import bindings, matcher
from metta_kb.utils import log_config


@pytest.mark.parametrize(
    "module",
    [model, tokenizer, parser, bindings, matcher, log_config],
    ids=lambda m: m.__name__,
)
def test_module_examples(module):
    failures, tried = doctest.testmod(module)
    assert tried > 0
    assert failures == 0
