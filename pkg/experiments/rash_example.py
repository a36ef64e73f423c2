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

from synrank import EXACT, Measure, SubstitutionEvent, SynonymLexicon, build_mapping, default_measures, parse_explanation
from synrank.synonymity import ThesaurusSynonymity

A = parse_explanation(["rash", "body", "worried", "really", "sick", "feeling", "over"])
B = parse_explanation(["body", "rash", "alarmed", "feeling", "sickly", "over", "real"])
log = [SubstitutionEvent(1, "worried", "alarmed"), SubstitutionEvent(2, "sick", "sickly"), SubstitutionEvent(3, "really", "real")]
mapping = build_mapping(A, B, log)
thesaurus = ThesaurusSynonymity(SynonymLexicon({"worried": ["alarmed"], "sick": ["sickly"], "really": ["real"]}))

print(f"{'':10}" + "".join(f"{m.id:>10}" for m in default_measures()))
print(f"{'Standard':10}" + "".join(f"{m.standard(A, B).similarity:>10.2f}" for m in default_measures()))
for syn in [EXACT, thesaurus]:
    print(f"{syn.name:10}" + "".join(f"{m.weighted(A, B, mapping, syn).similarity:>10.2f}" for m in default_measures()))
print(Measure.parse("rbo@0.9").standard(A, B))
