#  Copyright (c) 2023. The synrank contributors.
#  This file is part of the synrank project.
#
#  synrank is free software: you can redistribute it and/or modify
#  it under the terms of the GNU General Public License as published by
#  the Free Software Foundation, either version 3 of the License, or
#  (at your option) any later version.
#
#  synrank is distributed in the hope that it will be useful,
#  but WITHOUT ANY WARRANTY; without even the implied warranty of
#  MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
#  GNU General Public License for more details.
#
#  You should have received a copy of the GNU General Public License
#  along with synrank.  If not, see <http://www.gnu.org/licenses/>.
#
import random
from unittest import TestCase

import pytest

from synrank.exception import AmbiguousTarget, ConflictingChain
from synrank.explanation import Feature, RankedExplanation, SubstitutionEvent as Ev
from synrank.mapping import build_mapping, compose_substitutions
from tests.fixtures import EVENTS, ORIGINAL, PERTURBED, random_triple

ex = RankedExplanation.fromtokens


class Test(TestCase):
    def test_compose(self):
        self.assertEqual({Feature("worried"): Feature("alarmed")}, compose_substitutions([Ev(1, "worried", "alarmed")]))
        self.assertEqual({}, compose_substitutions([]))
        self.assertEqual({Feature("a"): Feature("c")}, compose_substitutions([Ev(1, "a", "b"), Ev(2, "b", "c")]))
        self.assertEqual({Feature("a"): Feature("d")}, compose_substitutions([Ev(1, "a", "b"), Ev(3, "b", "c"), Ev(9, "c", "d")]))
        self.assertEqual({}, compose_substitutions([Ev(1, "a", "b"), Ev(2, "b", "a")]))

    def test_compose_conflicts(self):
        with pytest.raises(ConflictingChain):
            compose_substitutions([Ev(1, "a", "c"), Ev(2, "b", "c")])
        with pytest.raises(ConflictingChain):
            compose_substitutions([Ev(1, "a", "b"), Ev(2, "a", "c")])
        with pytest.raises(ConflictingChain):
            compose_substitutions([Ev(2, "a", "b"), Ev(1, "c", "d")])

    def test_rash_example(self):
        m = build_mapping(ex(ORIGINAL), ex(PERTURBED), EVENTS)
        expected = {
            "rash": "rash",
            "body": "body",
            "feeling": "feeling",
            "over": "over",
            "worried": "alarmed",
            "sick": "sickly",
            "really": "real",
        }
        self.assertEqual(expected, {o.key: t.key for o, t in m.pairs})
        self.assertEqual((), m.unmapped_targets)
        self.assertEqual(3, len(m.substituted))
        self.assertEqual(Feature("alarmed"), m.target_of("Worried"))

    def test_truncation_and_entry(self):
        m = build_mapping(ex(["x", "y"]), ex(["x"]))
        self.assertEqual([("x", "x"), ("y", None)], [(o.key, t and t.key) for o, t in m.pairs])
        self.assertEqual((), m.unmapped_targets)
        m = build_mapping(ex(["x", "y"]), ex(["x", "z"]))
        self.assertEqual((Feature("y"),), m.nulls)
        self.assertEqual((Feature("z"),), m.unmapped_targets)

    def test_replacement_outside_explanation(self):
        m = build_mapping(ex(["x", "y"]), ex(["x", "z"]), [Ev(1, "y", "w")])
        self.assertIsNone(m.target_of("y"))
        self.assertEqual((Feature("z"),), m.unmapped_targets)

    def test_ambiguous(self):
        with pytest.raises(AmbiguousTarget):
            build_mapping(ex(["x", "y"]), ex(["x", "z"]), [Ev(1, "y", "x")])

    def test_partial_lists(self):
        # Second worked example: only the top of both explanations is listed.
        A = ex(["heartburn", "stomach", "burning", "chest", "acid", "night"])
        B = ex(["stomach", "heartburn", "scorching", "chest", "night", "sour"])
        m = build_mapping(A, B, [Ev(1, "burning", "scorching"), Ev(2, "acid", "sour")])
        self.assertEqual(6, len(m))
        self.assertEqual({("burning", "scorching"), ("acid", "sour")}, {(o.key, t.key) for o, t in m.substituted})
        self.assertEqual((), m.nulls)

    def test_invariants(self):
        rnd = random.Random(0)
        for _ in range(300):
            A, B, log = random_triple(rnd)
            m = build_mapping(A, B, log)
            self.assertEqual(len(A), len(m))
            targets = [t.key for _, t in m.pairs if t is not None] + [f.key for f in m.unmapped_targets]
            self.assertEqual(sorted(B.keys), sorted(targets))
            if not log:
                self.assertEqual((), m.substituted)
