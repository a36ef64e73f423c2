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

from synrank import SimulationConfig, SynonymLexicon, default_measures, generate_corpus, sensitivity_analysis, summarize
from synrank.serialization import render_table
from synrank.synonymity import EXACT, ThesaurusSynonymity

lexicon = SynonymLexicon(
    {
        "sick": ["ill", "sickly", "unwell"],
        "worried": ["alarmed", "anxious"],
        "pain": ["ache", "soreness"],
        "tired": ["weary", "exhausted"],
        "doctor": ["physician", "medic"],
        "fever": ["temperature"],
    }
)
vocabulary = list(lexicon) + ["i", "have", "a", "and", "my", "since", "days", "night", "feel", "very"]
corpus = generate_corpus(50, vocabulary, lexicon, SimulationConfig(seed=7, k=5, tau=0.4, max_iterations=8))
report = sensitivity_analysis(corpus, default_measures(), [EXACT, ThesaurusSynonymity(lexicon, name="thesaurus")], dataset="toy")
print(render_table(report))
print(summarize(report))
