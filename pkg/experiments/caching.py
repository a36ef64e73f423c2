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

import shelve
from tempfile import mkdtemp

from synrank import EXACT, default_measures, evaluate_corpus, parse_explanation
from synrank.explanation import AdversarialRecord

A = parse_explanation(["rash", "body", "worried", "really", "sick", "feeling", "over"])
B = parse_explanation(["body", "rash", "alarmed", "feeling", "sickly", "over", "real"])
record = AdversarialRecord("rash", "", "", A, B)

local = {}
with shelve.open(mkdtemp() + "/results") as disk:
    report = evaluate_corpus([record], default_measures(), [EXACT], caches=[local, disk])
    print(len(local), len(disk))
    # Disk hits also fill the empty in-memory cache placed before it.
    fresh = {}
    assert evaluate_corpus([record], default_measures(), [EXACT], caches=[fresh, disk]) == report
    print(len(fresh))
