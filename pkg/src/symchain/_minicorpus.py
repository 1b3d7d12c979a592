"""Embedded mini-corpus: offline problems with hand-checked translations.

Each item carries the natural-language problem, its gold answer, the
symbolic translation the engines solve, and canned texts for every pipeline
stage so replay runs work with no model access.
"""

# -- ProntoQA ---------------------------------------------------------------

_ALEX = {
    "id": "prontoqa-alex-shy",
    "dataset": "ProntoQA",
    "context": """Each jompus is fruity. Every jompus is a wumpus. Every wumpus is not transparent. Wumpuses are tumpuses. Tumpuses are mean. Tumpuses are vumpuses. Every vumpus is cold. Each vumpus is a yumpus. Yumpuses are orange. Yumpuses are numpuses. Numpuses are dull. Each numpus is a dumpus. Every dumpus is not shy. Impuses are shy. Dumpuses are rompuses. Each rompus is liquid. Rompuses are zumpuses. Alex is a tumpus.""",
    "question": "True or false: Alex is not shy.",
    "gold": "True",
    "translation": """Predicates:
Jompus(x) ::: Is x a jompus?
Fruity(x) ::: Is x fruity?
Wumpus(x) ::: Is x a wumpus?
Transparent(x) ::: Is x transparent?
Tumpus(x) ::: Is x a tumpus?
Mean(x) ::: Is x mean?
Vumpus(x) ::: Is x a vumpus?
Cold(x) ::: Is x cold?
Yumpus(x) ::: Is x a yumpus?
Orange(x) ::: Is x orange?
Numpus(x) ::: Is x a numpus?
Dull(x) ::: Is x dull?
Dumpus(x) ::: Is x a dumpus?
Shy(x) ::: Is x shy?
Impus(x) ::: Is x an impus?
Rompus(x) ::: Is x a rompus?
Liquid(x) ::: Is x liquid?
Zumpus(x) ::: Is x a zumpus?
Facts:
Tumpus(alex, True) ::: Alex is a tumpus.
Rules:
Jompus($x, True) ⇒ Fruity($x, True) ::: Each jompus is fruity.
Jompus($x, True) ⇒ Wumpus($x, True) ::: Every jompus is a wumpus.
Wumpus($x, True) ⇒ Transparent($x, False) ::: Every wumpus is not transparent.
Wumpus($x, True) ⇒ Tumpus($x, True) ::: Wumpuses are tumpuses.
Tumpus($x, True) ⇒ Mean($x, True) ::: Tumpuses are mean.
Tumpus($x, True) ⇒ Vumpus($x, True) ::: Tumpuses are vumpuses.
Vumpus($x, True) ⇒ Cold($x, True) ::: Every vumpus is cold.
Vumpus($x, True) ⇒ Yumpus($x, True) ::: Each vumpus is a yumpus.
Yumpus($x, True) ⇒ Orange($x, True) ::: Yumpuses are orange.
Yumpus($x, True) ⇒ Numpus($x, True) ::: Yumpuses are numpuses.
Numpus($x, True) ⇒ Dull($x, True) ::: Numpuses are dull.
Numpus($x, True) ⇒ Dumpus($x, True) ::: Each numpus is a dumpus.
Dumpus($x, True) ⇒ Shy($x, False) ::: Every dumpus is not shy.
Impus($x, True) ⇒ Shy($x, True) ::: Impuses are shy.
Dumpus($x, True) ⇒ Rompus($x, True) ::: Dumpuses are rompuses.
Rompus($x, True) ⇒ Liquid($x, True) ::: Each rompus is liquid.
Rompus($x, True) ⇒ Zumpus($x, True) ::: Rompuses are zumpuses.
Query:
Shy(alex, False) ::: Alex is not shy.""",
    "plan": """1. Identify the goal: establish whether Shy(alex, False) holds.
2. Use the fact about Alex: Tumpus(alex, True) is given.
3. Chain the category rules from tumpus through vumpus, yumpus, numpus, and dumpus.
4. Apply the rule Dumpus($x, True) ⇒ Shy($x, False) to Alex.
5. Compare the derived literal with the query and conclude.""",
    "solving": """Let's execute the plan step by step, applying first-order logic inference rules.
Step 1: Tumpus(alex, True) is a given fact.
Step 2: Vumpus(alex, True) by Universal Instantiation and Modus Ponens (tumpuses are vumpuses).
Step 3: Yumpus(alex, True) by Modus Ponens (each vumpus is a yumpus).
Step 4: Numpus(alex, True) by Modus Ponens (yumpuses are numpuses).
Step 5: Dumpus(alex, True) by Modus Ponens (each numpus is a dumpus).
Step 6: Shy(alex, False) by Modus Ponens (every dumpus is not shy).
Thus, "Shy(alex, False)" is true based on the logical deductions.
Final answer: {true}""",
    "verification": """Context verification: the predicates, facts, rules, and query correspond to the information in the original context and are semantically consistent.
Logic verification: the fact Tumpus(alex, True) is directly from the context with no invalid assumption; every chaining step correctly implements Universal Instantiation followed by Modus Ponens; the final step derives Shy(alex, False) from Dumpus(alex, True).
The conclusion "Shy(alex, False) is true" is valid and remains unchanged.
Final answer: {true}""",
    "cot": """Alex is a tumpus. Tumpuses are vumpuses, so Alex is a vumpus. Each vumpus is a yumpus, so Alex is a yumpus. Yumpuses are numpuses, so Alex is a numpus. Each numpus is a dumpus, so Alex is a dumpus. Every dumpus is not shy, so Alex is not shy.
The correct option is: A)""",
    "naive": "Answer: {A}",
}

_MAX = {
    "id": "prontoqa-max-sour",
    "dataset": "ProntoQA",
    "context": """Jompuses are not shy. Jompuses are yumpuses. Each yumpus is aggressive. Each yumpus is a dumpus. Dumpuses are not wooden. Dumpuses are wumpuses. Wumpuses are red. Every wumpus is an impus. Each impus is opaque. Impuses are tumpuses. Numpuses are sour. Tumpuses are not sour. Tumpuses are vumpuses. Vumpuses are earthy. Every vumpus is a zumpus. Zumpuses are small. Zumpuses are rompuses. Max is a yumpus.""",
    "question": "Is the following statement true or false? Max is sour.",
    "gold": "False",
    "translation": """Predicates:
Jompus(x) ::: Is x a jompus?
Shy(x) ::: Is x shy?
Yumpus(x) ::: Is x a yumpus?
Aggressive(x) ::: Is x aggressive?
Dumpus(x) ::: Is x a dumpus?
Wooden(x) ::: Is x wooden?
Wumpus(x) ::: Is x a wumpus?
Red(x) ::: Is x red?
Impus(x) ::: Is x an impus?
Opaque(x) ::: Is x opaque?
Numpus(x) ::: Is x a numpus?
Sour(x) ::: Is x sour?
Tumpus(x) ::: Is x a tumpus?
Vumpus(x) ::: Is x a vumpus?
Earthy(x) ::: Is x earthy?
Zumpus(x) ::: Is x a zumpus?
Small(x) ::: Is x small?
Rompus(x) ::: Is x a rompus?
Facts:
Yumpus(max, True) ::: Max is a yumpus.
Rules:
Jompus($x, True) ⇒ Shy($x, False) ::: Jompuses are not shy.
Jompus($x, True) ⇒ Yumpus($x, True) ::: Jompuses are yumpuses.
Yumpus($x, True) ⇒ Aggressive($x, True) ::: Each yumpus is aggressive.
Yumpus($x, True) ⇒ Dumpus($x, True) ::: Each yumpus is a dumpus.
Dumpus($x, True) ⇒ Wooden($x, False) ::: Dumpuses are not wooden.
Dumpus($x, True) ⇒ Wumpus($x, True) ::: Dumpuses are wumpuses.
Wumpus($x, True) ⇒ Red($x, True) ::: Wumpuses are red.
Wumpus($x, True) ⇒ Impus($x, True) ::: Every wumpus is an impus.
Impus($x, True) ⇒ Opaque($x, True) ::: Each impus is opaque.
Impus($x, True) ⇒ Tumpus($x, True) ::: Impuses are tumpuses.
Numpus($x, True) ⇒ Sour($x, True) ::: Numpuses are sour.
Tumpus($x, True) ⇒ Sour($x, False) ::: Tumpuses are not sour.
Tumpus($x, True) ⇒ Vumpus($x, True) ::: Tumpuses are vumpuses.
Vumpus($x, True) ⇒ Earthy($x, True) ::: Vumpuses are earthy.
Vumpus($x, True) ⇒ Zumpus($x, True) ::: Every vumpus is a zumpus.
Zumpus($x, True) ⇒ Small($x, True) ::: Zumpuses are small.
Zumpus($x, True) ⇒ Rompus($x, True) ::: Zumpuses are rompuses.
Query:
Sour(max, True) ::: Max is sour.""",
    "plan": """1. Identify the goal: establish whether Sour(max, True) holds.
2. Use the fact about Max: Yumpus(max, True) is given.
3. Chain the category rules from yumpus through dumpus, wumpus, and impus to tumpus.
4. Apply the rule Tumpus($x, True) ⇒ Sour($x, False) to Max.
5. Compare the derived literal with the query and conclude.""",
    "solving": """Let's execute the plan step by step, applying first-order logic inference rules.
Step 1: Yumpus(max, True) is a given fact.
Step 2: Dumpus(max, True) by Universal Instantiation and Modus Ponens (each yumpus is a dumpus).
Step 3: Wumpus(max, True) by Modus Ponens (dumpuses are wumpuses).
Step 4: Impus(max, True) by Modus Ponens (every wumpus is an impus).
Step 5: Tumpus(max, True) by Modus Ponens (impuses are tumpuses).
Step 6: Sour(max, False) by Modus Ponens (tumpuses are not sour).
The derived literal Sour(max, False) refutes the query Sour(max, True).
Final answer: {false}""",
    "verification": """Context verification: the predicates, facts, rules, and query correspond to the information in the original context and are semantically consistent.
Logic verification: every chaining step correctly implements Universal Instantiation followed by Modus Ponens; the final step derives Sour(max, False), which contradicts the query.
The conclusion "Sour(max, True) is false" is valid and remains unchanged.
Final answer: {false}""",
    "cot": """Max is a yumpus. Each yumpus is a dumpus. So Max is a dumpus. Dumpuses are wumpuses. So Max is a wumpus. Every wumpus is an impus. So Max is an impus. Impuses are tumpuses. So Max is a tumpus. Tumpuses are not sour. So Max is not sour.
The correct option is: B)""",
    "naive": "Answer: {B}",
}

# -- ProofWriter --------------------------------------------------------------

_ANNE = {
    "id": "proofwriter-anne-white",
    "dataset": "ProofWriter",
    "context": """Anne is quiet. Erin is furry. Erin is green. Young people are furry. If Anne is quiet then Anne is red. Young, green people are rough. If someone is green then they are white.""",
    "question": "Based on the above information, is the following statement true, false, or unknown? Anne is white.",
    "gold": "Unknown",
    "depth": 2,
    "translation": """Predicates:
Quiet(x) ::: Is x quiet?
Furry(x) ::: Is x furry?
Green(x) ::: Is x green?
Young(x) ::: Is x young?
Red(x) ::: Is x red?
Rough(x) ::: Is x rough?
White(x) ::: Is x white?
Facts:
Quiet(anne, True) ::: Anne is quiet.
Furry(erin, True) ::: Erin is furry.
Green(erin, True) ::: Erin is green.
Rules:
Young($x, True) ⇒ Furry($x, True) ::: Young people are furry.
Quiet(anne, True) ⇒ Red(anne, True) ::: If Anne is quiet then Anne is red.
Young($x, True) ∨ Green($x, True) ⇒ Rough($x, True) ::: Young, green people are rough (the comma reads as or).
Green($x, True) ⇒ White($x, True) ::: If someone is green then they are white.
Query:
White(anne, True) ::: Anne is white.""",
    "plan": """1. Identify the goal: establish whether White(anne, True) holds.
2. Review the given facts about Anne: only Quiet(anne, True) is stated.
3. Apply the conditional rule about Anne being quiet to derive Red(anne, True).
4. Check every rule with White in the head for an applicable body.
5. Conclude true, false, or unknown from what is derivable.""",
    "solving": """Let's execute the plan step by step, applying first-order logic inference rules.
Step 1: Quiet(anne, True) is a given fact.
Step 2: Red(anne, True) by Modus Ponens from the conditional rule about Anne.
Step 3: The only rule concluding White requires Green($x, True), and Green(anne, True) is neither given nor derivable.
Given the information and the rules, we cannot infer "White(anne, True)".
Thus, White(anne, True) is unknown.
Final answer: {unknown}""",
    "verification": """Context verification: the context and query correctly correspond to the information in the original context and are semantically consistent; the compound predicate "Young, green people are rough" is correctly read with the comma as 'or'.
Logic verification: Quiet(anne, True) is directly from the context; Red(anne, True) follows by Modus Ponens; no rule chain reaches White(anne).
The conclusion that "White(anne, True)" remains unknown is consistent with the logical assessment of the provided context.
Final answer: {unknown}""",
    "cot": """Anne is quiet. If Anne is quiet then Anne is red, so Anne is red. Nothing stated makes Anne green, and only green things are concluded white. There is no way to derive that Anne is white or that she is not.
The correct option is: C)""",
    "naive": "Answer: {C}",
}

_TIGER = {
    "id": "proofwriter-tiger-young",
    "dataset": "ProofWriter",
    "context": """The cow is blue. The cow is round. The cow likes the lion. The cow visits the tiger. The lion is cold. The lion is nice. The lion likes the squirrel. The squirrel is round. The squirrel sees the lion. The squirrel visits the cow. The tiger likes the cow. The tiger likes the squirrel. If something is cold then it visits the tiger. If something visits the tiger then it is nice. If something sees the tiger and it is young then it is blue. If something is nice then it sees the tiger. If something likes the squirrel and it likes the cow then it visits the tiger. If something is nice and it sees the tiger then it is young. If the cow is cold and the cow visits the lion then the lion sees the squirrel.""",
    "question": "Based on the above information, is the following statement true, false, or unknown? The tiger is not young.",
    "gold": "False",
    "depth": 4,
    "translation": """Predicates:
Blue(x) ::: Is x blue?
Round(x) ::: Is x round?
Likes(x, y) ::: Does x like y?
Visits(x, y) ::: Does x visit y?
Cold(x) ::: Is x cold?
Nice(x) ::: Is x nice?
Sees(x, y) ::: Does x see y?
Young(x) ::: Is x young?
Facts:
Blue(cow, True) ::: The cow is blue.
Round(cow, True) ::: The cow is round.
Likes(cow, lion, True) ::: The cow likes the lion.
Visits(cow, tiger, True) ::: The cow visits the tiger.
Cold(lion, True) ::: The lion is cold.
Nice(lion, True) ::: The lion is nice.
Likes(lion, squirrel, True) ::: The lion likes the squirrel.
Round(squirrel, True) ::: The squirrel is round.
Sees(squirrel, lion, True) ::: The squirrel sees the lion.
Visits(squirrel, cow, True) ::: The squirrel visits the cow.
Likes(tiger, cow, True) ::: The tiger likes the cow.
Likes(tiger, squirrel, True) ::: The tiger likes the squirrel.
Rules:
Cold($x, True) ⇒ Visits($x, tiger, True) ::: If something is cold then it visits the tiger.
Visits($x, tiger, True) ⇒ Nice($x, True) ::: If something visits the tiger then it is nice.
Sees($x, tiger, True) ∧ Young($x, True) ⇒ Blue($x, True) ::: If something sees the tiger and it is young then it is blue.
Nice($x, True) ⇒ Sees($x, tiger, True) ::: If something is nice then it sees the tiger.
Likes($x, squirrel, True) ∧ Likes($x, cow, True) ⇒ Visits($x, tiger, True) ::: If something likes the squirrel and it likes the cow then it visits the tiger.
Nice($x, True) ∧ Sees($x, tiger, True) ⇒ Young($x, True) ::: If something is nice and it sees the tiger then it is young.
Cold(cow, True) ∧ Visits(cow, lion, True) ⇒ Sees(lion, squirrel, True) ::: If the cow is cold and the cow visits the lion then the lion sees the squirrel.
Query:
Young(tiger, False) ::: The tiger is not young.""",
    "plan": """1. Identify the goal: establish whether Young(tiger, False) holds.
2. Collect the facts about the tiger: it likes the cow and likes the squirrel.
3. Apply the rule about liking the squirrel and the cow to derive a visit.
4. Chain through niceness and seeing the tiger to test whether the tiger is young.
5. Compare the derived literal with the query and conclude.""",
    "solving": """Let's execute the plan step by step, applying first-order logic inference rules.
Step 1: Likes(tiger, cow, True) and Likes(tiger, squirrel, True) are given facts.
Step 2: Visits(tiger, tiger, True) by Modus Ponens (likes the squirrel and likes the cow).
Step 3: Nice(tiger, True) by Modus Ponens (visits the tiger).
Step 4: Sees(tiger, tiger, True) by Modus Ponens (nice things see the tiger).
Step 5: Young(tiger, True) by Modus Ponens (nice and sees the tiger).
The derived Young(tiger, True) refutes the query Young(tiger, False).
Thus, the statement "the tiger is not young" is false.
Final answer: {false}""",
    "verification": """Context verification: the context and query correctly correspond to the information in the original context and are semantically consistent; "Visits(tiger, tiger)" is a valid reading since the rule's something may be the tiger itself.
Logic verification: every step uses facts from the context or literals derived in earlier steps, applying Modus Ponens with Universal Instantiation; the chain tiger-visits, nice, sees, young is valid.
The conclusion that the statement is false is correct and remains unchanged.
Final answer: {false}""",
    "cot": """The tiger likes the cow. The tiger likes the squirrel. If something likes the squirrel and it likes the cow, then it visits the tiger. So the tiger visits the tiger. If something visits the tiger then it is nice. So the tiger is nice. If something is nice then it sees the tiger. So the tiger sees the tiger. If something is nice and it sees the tiger then it is young. So the tiger is young. The statement says the tiger is not young, which is contradicted.
The correct option is: B)""",
    "naive": "Answer: {B}",
}

# -- FOLIO --------------------------------------------------------------------

_MIROSLAV = {
    "id": "folio-miroslav-music",
    "dataset": "FOLIO",
    "context": """Miroslav Venhoda was a Czech choral conductor who specialized in the performance of Renaissance and Baroque music. Any choral conductor is a musician. Some musicians love music. Miroslav Venhoda published a book in 1946 called Method of Studying Gregorian Chant.""",
    "question": "Is the following statement true, false, or uncertain? Miroslav Venhoda loved music.",
    "gold": "Unknown",
    "translation": """Predicates:
Czech(x) ::: x is a Czech person.
ChoralConductor(x) ::: x is a choral conductor.
Musician(x) ::: x is a musician.
Love(x, y) ::: x loves y.
Specialize(x, y) ::: x specializes in y.
Book(x) ::: x is a book.
Author(x, y) ::: x is the author of y.
Publish(x, y) ::: x is published in year y.
Facts:
Czech(miroslav, True) ::: Miroslav Venhoda was Czech.
ChoralConductor(miroslav, True) ::: Miroslav Venhoda was a choral conductor.
Specialize(miroslav, renaissance, True) ::: He specialized in Renaissance music.
Specialize(miroslav, baroque, True) ::: He specialized in Baroque music.
Musician(someMusician, True) ::: Witness for: some musicians love music.
Love(someMusician, music, True) ::: Witness for: some musicians love music.
Book(methodOfStudyingGregorianChant, True) ::: Method of Studying Gregorian Chant is a book.
Author(miroslav, methodOfStudyingGregorianChant, True) ::: Miroslav Venhoda wrote it.
Publish(methodOfStudyingGregorianChant, year1946, True) ::: It was published in 1946.
Rules:
ChoralConductor($x, True) ⇒ Musician($x, True) ::: Any choral conductor is a musician.
Query:
Love(miroslav, music, True) ::: Miroslav Venhoda loved music.""",
    "plan": """1. Identify the goal: assess whether Love(miroslav, music, True) can be concluded.
2. Derive Miroslav's category membership from the choral-conductor rule.
3. Check whether the existential premise about some musicians transfers to Miroslav specifically.
4. Conclude true, false, or unknown from what is derivable.""",
    "solving": """Let's execute the plan step by step, applying first-order logic inference rules.
Step 1: ChoralConductor(miroslav, True) is a given fact.
Step 2: Musician(miroslav, True) by Universal Instantiation and Modus Ponens (any choral conductor is a musician).
Step 3: The premise that some musicians love music names an unspecified witness; it does not identify Miroslav.
The conclusion that Miroslav Venhoda loved music cannot be proven from the premises.
Thus, the statement is unknown.
Final answer: {unknown}""",
    "verification": """Context verification: the translation is semantically consistent with the natural language; the existential premise is correctly represented by an anonymous witness rather than by Miroslav.
Logic verification: the inference of Musician(miroslav) is a correct use of Universal Instantiation and Modus Ponens; no valid step derives Love(miroslav, music).
The original conclusion "unknown" is correct and remains unchanged.
Final answer: {unknown}""",
    "cot": """Miroslav Venhoda was a choral conductor, and any choral conductor is a musician, so he was a musician. Some musicians love music, but that does not establish that Miroslav in particular loved music. Nothing else speaks to his feelings about music.
The correct option is: C)""",
    "naive": "Answer: {C}",
}

_BLAKE = {
    "id": "folio-blake-portland",
    "dataset": "FOLIO",
    "context": """The Blake McFall Company Building is a commercial warehouse listed on the National Register of Historic Places. The Blake McFall Company Building was added to the National Register of Historic Places in 1990. The Emmet Building is a five-story building in Portland, Oregon. The Emmet Building was built in 1915. The Emmet Building is another name for the Blake McFall Company Building. John works at the Emmet Building.""",
    "question": "Is the following statement true, false, or uncertain? The Blake McFall Company Building is located in Portland, Oregon.",
    "gold": "True",
    "translation": """Predicates:
CommercialWarehouse(x) ::: x is a commercial warehouse.
ListedOnRegister(x) ::: x is listed on the National Register of Historic Places.
AddedToRegister(x, y) ::: x was added to the register in year y.
FiveStory(x) ::: x is a five-story building.
LocatedIn(x, y) ::: x is located in y.
Built(x, y) ::: x was built in year y.
SameBuilding(x, y) ::: x is another name for y.
WorksAt(x, y) ::: x works at y.
Facts:
CommercialWarehouse(blakeMcFall, True) ::: The Blake McFall Company Building is a commercial warehouse.
ListedOnRegister(blakeMcFall, True) ::: It is listed on the National Register of Historic Places.
AddedToRegister(blakeMcFall, year1990, True) ::: It was added to the register in 1990.
FiveStory(emmet, True) ::: The Emmet Building is a five-story building.
LocatedIn(emmet, portland, True) ::: The Emmet Building is in Portland, Oregon.
Built(emmet, year1915, True) ::: The Emmet Building was built in 1915.
SameBuilding(emmet, blakeMcFall, True) ::: The Emmet Building is another name for the Blake McFall Company Building.
WorksAt(john, emmet, True) ::: John works at the Emmet Building.
Rules:
SameBuilding($x, $y, True) ⇒ SameBuilding($y, $x, True) ::: Naming the same building is symmetric.
SameBuilding($x, $y, True) ∧ LocatedIn($x, $z, True) ⇒ LocatedIn($y, $z, True) ::: The same building shares its location.
Query:
LocatedIn(blakeMcFall, portland, True) ::: The Blake McFall Company Building is located in Portland, Oregon.""",
    "plan": """1. Identify the goal: establish whether LocatedIn(blakeMcFall, portland, True) holds.
2. Use the identity between the Emmet Building and the Blake McFall Company Building.
3. Transfer the Emmet Building's location through the identity.
4. Conclude from the derived literal.""",
    "solving": """Let's execute the plan step by step, applying first-order logic inference rules.
Step 1: SameBuilding(emmet, blakeMcFall, True) and LocatedIn(emmet, portland, True) are given facts.
Step 2: LocatedIn(blakeMcFall, portland, True) by Modus Ponens (the same building shares its location).
Thus, the statement is true.
Final answer: {true}""",
    "verification": """Context verification: "another name for" is correctly modeled as a same-building identity with symmetric and location-sharing rules; the facts match the natural language.
Logic verification: the single derivation step instantiates the location-sharing rule with the given identity and location facts, a correct Modus Ponens.
The conclusion "true" is valid and remains unchanged.
Final answer: {true}""",
    "cot": """The Blake McFall Company Building is another name for the Emmet Building. The Emmet Building is located in Portland, Oregon. Therefore, the Blake McFall Company Building is located in Portland, Oregon.
The correct option is: A)""",
    "naive": "Answer: {A}",
}

_HARRY = {
    "id": "folio-harry-walden",
    "dataset": "FOLIO",
    "context": """Books contain tons of knowledge. When a person reads a book, that person gains knowledge. If a person gains knowledge, they become smarter. Harry is a person. Harry read the book Walden by Henry Thoreau.""",
    "question": "Is the following statement true, false, or uncertain? Harry is smarter than before.",
    "gold": "True",
    "translation": """Predicates:
Book(x) ::: x is a book.
Contains(x, y) ::: x contains y.
Person(x) ::: x is a person.
Reads(x, y) ::: x reads y.
Gains(x, y) ::: x gains y.
Smarter(x) ::: x is smarter than before.
Facts:
Person(harry, True) ::: Harry is a person.
Book(walden, True) ::: Walden is a book.
Reads(harry, walden, True) ::: Harry read Walden.
Rules:
Book($x, True) ⇒ Contains($x, knowledge, True) ::: Books contain tons of knowledge.
Person($x, True) ∧ Reads($x, $y, True) ⇒ Gains($x, knowledge, True) ::: When a person reads a book, that person gains knowledge.
Person($x, True) ∧ Gains($x, knowledge, True) ⇒ Smarter($x, True) ::: If a person gains knowledge, they become smarter.
Query:
Smarter(harry, True) ::: Harry is smarter than before.""",
    "plan": """1. Identify the goal: establish whether Smarter(harry, True) holds.
2. Use the facts that Harry is a person and read Walden.
3. Apply the reading rule to derive that Harry gains knowledge.
4. Apply the knowledge rule to derive that Harry becomes smarter.""",
    "solving": """Let's execute the plan step by step, applying first-order logic inference rules.
Step 1: Person(harry, True) and Reads(harry, walden, True) are given facts.
Step 2: Gains(harry, knowledge, True) by Modus Ponens (a person reading a book gains knowledge).
Step 3: Smarter(harry, True) by Modus Ponens (a person gaining knowledge becomes smarter).
Thus, Smarter(harry) is true.
Final answer: {true}""",
    "verification": """Context verification: the translation keeps Harry's personhood as an explicit fact, which the derivation needs; the rules match the natural language.
Logic verification: both derivation steps correctly instantiate their rules with facts from the context or the previous step.
The conclusion "true" is valid and remains unchanged.
Final answer: {true}""",
    "cot": """Harry is a person and read the book Walden. When a person reads a book, that person gains knowledge, so Harry gained knowledge. If a person gains knowledge, they become smarter. Thus, Harry is smarter than before.
The correct option is: A)""",
    "naive": "Answer: {A}",
}

_HAWK = {
    "id": "folio-hawk-lands",
    "dataset": "FOLIO",
    "context": """A hawk never lands. Some birds are hawks.""",
    "question": "Is the following statement true, false, or uncertain? All birds land.",
    "gold": "False",
    "translation": """Predicates:
Hawk(x) ::: x is a hawk.
Bird(x) ::: x is a bird.
Lands(x) ::: x lands.
Facts:
Bird(skolemHawk, True) ::: Witness for: some birds are hawks.
Hawk(skolemHawk, True) ::: Witness for: some birds are hawks.
Rules:
Hawk($x, True) ⇒ Lands($x, False) ::: A hawk never lands.
Query:
Bird(skolemHawk) → Lands(skolemHawk) ::: All birds land (checked at the hawk witness).""",
    "plan": """1. Identify the goal: test the universal claim that all birds land.
2. Name a witness bird that is a hawk from the existential premise.
3. Apply the rule that hawks never land to the witness.
4. A bird that does not land falsifies the universal claim.""",
    "solving": """Let's execute the plan step by step, applying first-order logic inference rules.
Step 1: Bird(skolemHawk, True) and Hawk(skolemHawk, True) name the witness by Existential Instantiation.
Step 2: Lands(skolemHawk, False) by Modus Ponens (a hawk never lands).
Step 3: The witness is a bird that does not land, so "all birds land" fails at the witness.
Thus, the statement is false.
Final answer: {false}""",
    "verification": """Context verification: the existential premise is correctly witnessed and the universal query is correctly checked at the witness instance.
Logic verification: Existential Instantiation names a fresh witness; Modus Ponens derives that it does not land; a single counterinstance makes the universal statement false.
The conclusion "false" is valid and remains unchanged.
Final answer: {false}""",
    "cot": """Some birds are hawks, so there is at least one bird that is a hawk. A hawk never lands, so that bird never lands. Therefore it is not the case that all birds land.
The correct option is: B)""",
    "naive": "Answer: {B}",
}

_BEN = {
    "id": "folio-ben-yellow",
    "dataset": "FOLIO",
    "context": """If a cartoon character is yellow, it is from the Simpsons. If a cartoon character is from the Simpsons, then it is loved by children. Ben is not yellow. Ben is not ugly.""",
    "question": "Is the following statement true, false, or uncertain? Ben is ugly or yellow.",
    "gold": "False",
    "translation": """Predicates:
Yellow(x) ::: x is yellow.
Simpsons(x) ::: x is from the Simpsons.
Loved(x) ::: x is loved by children.
Ugly(x) ::: x is ugly.
Facts:
Yellow(ben, False) ::: Ben is not yellow.
Ugly(ben, False) ::: Ben is not ugly.
Rules:
Yellow($x, True) ⇒ Simpsons($x, True) ::: If a cartoon character is yellow, it is from the Simpsons.
Simpsons($x, True) ⇒ Loved($x, True) ::: If a cartoon character is from the Simpsons, it is loved by children.
Query:
Yellow(ben) ∨ Ugly(ben) ::: Ben is ugly or yellow.""",
    "plan": """1. Identify the goal: evaluate the disjunction Yellow(ben) ∨ Ugly(ben).
2. Check the premises for Ben's color and looks.
3. Evaluate each disjunct against the derived literals.
4. A disjunction with both disjuncts refuted is false.""",
    "solving": """Let's execute the plan step by step, applying first-order logic inference rules.
Step 1: Yellow(ben) → Simpsons(ben) by Universal Instantiation from premise 1.
Step 2: Simpsons(ben) → Loved(ben) by Universal Instantiation from premise 2.
Step 3: Yellow(ben, False) and Ugly(ben, False) are given, so both disjuncts are refuted.
Thus, we can conclude that (Yellow(ben) ∨ Ugly(ben)) is false by contradiction.""",
    "verification": """Context verification: "If a cartoon character is yellow, it is from the Simpsons" is semantically consistent with Yellow($x, True) ⇒ Simpsons($x, True); the remaining lines are likewise consistent.
Logic verification: Step 1 and Step 2 correctly implement Universal Instantiation; Step 3 cites the given negative facts; a disjunction of two refuted disjuncts is false.
Thus, the solving process is logically valid. The answer is verified to be false.""",
    "cot": """Ben is not yellow, and Ben is not ugly. The statement claims Ben is ugly or yellow, but both possibilities are denied by the premises.
The correct option is: B)""",
    "naive": "Answer: {B}",
}

# -- LogicalDeduction ---------------------------------------------------------

_CARS = {
    "id": "logicaldeduction-antique-cars",
    "dataset": "LogicalDeduction",
    "context": """The following paragraphs each describe a set of three objects arranged in a fixed order. The statements are logically consistent within each paragraph. In an antique car show, there are three vehicles: a station wagon, a convertible, and a minivan. The station wagon is the oldest. The minivan is newer than the convertible.""",
    "question": "Which of the following is true?",
    "options": [
        ("A", "The station wagon is the second-newest."),
        ("B", "The convertible is the second-newest."),
        ("C", "The minivan is the second-newest."),
    ],
    "gold": "B",
    "translation": """Domain:
1: oldest
3: newest
Variables:
station_wagon ∈ {1, 2, 3}
convertible ∈ {1, 2, 3}
minivan ∈ {1, 2, 3}
Constraints:
station_wagon == 1 ::: The station wagon is the oldest.
minivan > convertible ::: The minivan is newer than the convertible.
AllDifferentConstraint([station_wagon, convertible, minivan]) ::: All vehicles have different values.
Query:
A) station_wagon == 2 ::: The station wagon is the second-newest.
B) convertible == 2 ::: The convertible is the second-newest.
C) minivan == 2 ::: The minivan is the second-newest.""",
    "plan": """1. Identify the variables station_wagon, convertible, minivan with values 1 to 3, where 1 is the oldest.
2. Apply station_wagon == 1 directly.
3. Apply minivan > convertible to order the remaining two vehicles.
4. Enumerate the assignments that satisfy every constraint and evaluate each option.""",
    "solving": """Let's solve the constraint satisfaction problem following the plan.
Step 1: Assign station_wagon the value 1 since it is the oldest.
Step 2: The remaining values {2, 3} go to convertible and minivan; minivan > convertible forces convertible = 2 and minivan = 3.
Step 3: The only valid order is station_wagon=1, convertible=2, minivan=3.
Step 4: Only query B (convertible == 2) holds in the valid order.
Therefore, the final answer is B.
Final answer: {B}""",
    "verification": """Context verification: the domain runs from 1 (oldest) to 3 (newest), so "newer than" correctly maps to a greater value; the constraints match the natural language.
Solving verification: station_wagon=1, convertible=2, minivan=3 satisfies every constraint and is the unique solution, so convertible == 2 must be true.
The original answer B remains unchanged.
Final answer: {B}""",
    "cot": """The station wagon is the oldest, taking position 1. The minivan is newer than the convertible, so the convertible takes position 2 and the minivan position 3. The convertible is therefore the second-newest.
The correct option is: B)""",
    "naive": "Answer: {B}",
}

_BIRDS = {
    "id": "logicaldeduction-branch-birds",
    "dataset": "LogicalDeduction",
    "context": """On a branch, there are five birds: a quail, an owl, a raven, a falcon, and a robin. The owl is the leftmost. The robin is to the left of the raven. The quail is the rightmost. The raven is the third from the left.""",
    "question": "Which of the following is true?",
    "options": [
        ("A", "The quail is the rightmost."),
        ("B", "The owl is the rightmost."),
        ("C", "The raven is the rightmost."),
        ("D", "The falcon is the rightmost."),
        ("E", "The robin is the rightmost."),
    ],
    "gold": "A",
    "translation": """Domain:
1: leftmost
5: rightmost
Variables:
quail ∈ {1, 2, 3, 4, 5}
owl ∈ {1, 2, 3, 4, 5}
raven ∈ {1, 2, 3, 4, 5}
falcon ∈ {1, 2, 3, 4, 5}
robin ∈ {1, 2, 3, 4, 5}
Constraints:
owl == 1 ::: The owl is the leftmost.
robin < raven ::: The robin is to the left of the raven.
quail == 5 ::: The quail is the rightmost.
raven == 3 ::: The raven is the third from the left.
AllDifferentConstraint([quail, owl, raven, falcon, robin]) ::: All birds have different positions.
Query:
A) quail == 5 ::: The quail is the rightmost.
B) owl == 5 ::: The owl is the rightmost.
C) raven == 5 ::: The raven is the rightmost.
D) falcon == 5 ::: The falcon is the rightmost.
E) robin == 5 ::: The robin is the rightmost.""",
    "plan": """1. Identify the five position variables over 1 to 5, where 1 is leftmost.
2. Apply the direct constraints owl == 1, quail == 5, raven == 3.
3. Place the robin left of the raven in the remaining positions.
4. Evaluate each option against the assignments that satisfy everything.""",
    "solving": """Let's solve the constraint satisfaction problem following the plan.
Step 1: owl = 1, quail = 5, raven = 3 are forced directly.
Step 2: robin < raven leaves only position 2 for the robin, so the falcon takes position 4.
Step 3: The unique order is owl, robin, raven, falcon, quail.
Step 4: The quail is the rightmost, so only query A holds.
Therefore, the final answer is A.
Final answer: {A}""",
    "verification": """Context verification: the domain runs from 1 (leftmost) to 5 (rightmost); "to the left of" correctly maps to a smaller value.
Solving verification: owl=1, robin=2, raven=3, falcon=4, quail=5 satisfies every constraint and is the unique solution; quail == 5 must be true.
The original answer A remains unchanged.
Final answer: {A}""",
    "cot": """The owl is the leftmost. This means the owl is not the rightmost. The robin is to the left of the raven, so neither the robin nor the raven is the rightmost. The quail is the rightmost, which directly answers the question. The raven is the third from the left, confirming it is not the rightmost.
The correct option is: A)""",
    "naive": "Answer: {A}",
}

# -- AR-LSAT --------------------------------------------------------------------

_LOCKERS = {
    "id": "arlsat-lockers",
    "dataset": "ARLSAT",
    "context": """Four boys — Fred, Juan, Marc, and Paul — and three girls — Nita, Rachel, and Trisha — will be assigned to a row of five adjacent lockers, numbered consecutively 1 through 5, arranged along a straight wall. The following conditions govern the assignment of lockers to the seven children: Each locker must be assigned to either one or two children, and each child must be assigned to exactly one locker. Each shared locker must be assigned to one girl and one boy. Juan must share a locker, but Rachel cannot share a locker. Nita's locker cannot be adjacent to Trisha's locker. Fred must be assigned to locker 3.""",
    "question": "If the first three lockers are assigned to girls, which one of the following must be true?",
    "options": [
        ("A", "Juan is assigned to locker 1."),
        ("B", "Nita is assigned to locker 3."),
        ("C", "Trisha is assigned to locker 1."),
        ("D", "Juan is assigned to the same locker as Trisha."),
        ("E", "Paul is assigned to the same locker as Trisha."),
    ],
    "gold": "A",
    "translation": """Domain:
1: locker one
5: locker five
Variables:
fred ∈ {1, 2, 3, 4, 5}
juan ∈ {1, 2, 3, 4, 5}
marc ∈ {1, 2, 3, 4, 5}
paul ∈ {1, 2, 3, 4, 5}
nita ∈ {1, 2, 3, 4, 5}
rachel ∈ {1, 2, 3, 4, 5}
trisha ∈ {1, 2, 3, 4, 5}
Constraints:
fred == 3 ::: Fred must be assigned to locker 3.
fred != juan ::: Two boys cannot share a locker.
fred != marc ::: Two boys cannot share a locker.
fred != paul ::: Two boys cannot share a locker.
juan != marc ::: Two boys cannot share a locker.
juan != paul ::: Two boys cannot share a locker.
marc != paul ::: Two boys cannot share a locker.
nita != rachel ::: Two girls cannot share a locker.
nita != trisha ::: Two girls cannot share a locker.
rachel != trisha ::: Two girls cannot share a locker.
rachel != fred ::: Rachel cannot share a locker.
rachel != juan ::: Rachel cannot share a locker.
rachel != marc ::: Rachel cannot share a locker.
rachel != paul ::: Rachel cannot share a locker.
juan == nita or juan == rachel or juan == trisha ::: Juan must share a locker, necessarily with a girl.
|nita - trisha| != 1 ::: Nita's locker cannot be adjacent to Trisha's locker.
fred == 1 or juan == 1 or marc == 1 or paul == 1 or nita == 1 or rachel == 1 or trisha == 1 ::: Locker 1 must be assigned.
fred == 2 or juan == 2 or marc == 2 or paul == 2 or nita == 2 or rachel == 2 or trisha == 2 ::: Locker 2 must be assigned.
fred == 3 or juan == 3 or marc == 3 or paul == 3 or nita == 3 or rachel == 3 or trisha == 3 ::: Locker 3 must be assigned.
fred == 4 or juan == 4 or marc == 4 or paul == 4 or nita == 4 or rachel == 4 or trisha == 4 ::: Locker 4 must be assigned.
fred == 5 or juan == 5 or marc == 5 or paul == 5 or nita == 5 or rachel == 5 or trisha == 5 ::: Locker 5 must be assigned.
nita == 1 or rachel == 1 or trisha == 1 ::: A girl is assigned to locker 1 (question condition).
nita == 2 or rachel == 2 or trisha == 2 ::: A girl is assigned to locker 2 (question condition).
nita == 3 or rachel == 3 or trisha == 3 ::: A girl is assigned to locker 3 (question condition).
Query:
A) juan == 1 and (nita == 1 or rachel == 1 or trisha == 1) ::: Juan is assigned to locker 1, sharing with a girl.
B) nita == 3 ::: Nita is assigned to locker 3.
C) trisha == 1 ::: Trisha is assigned to locker 1.
D) juan == trisha ::: Juan is assigned to the same locker as Trisha.
E) paul == trisha ::: Paul is assigned to the same locker as Trisha.""",
    "plan": """1. Identify the seven position variables over lockers 1 to 5.
2. Apply the fixed assignment fred == 3 and the question condition that a girl occupies each of lockers 1, 2, and 3.
3. Apply the sharing rules: same-gender pairs cannot share, Rachel shares with no one, Juan shares with a girl.
4. Apply the adjacency exclusion between Nita and Trisha.
5. Enumerate the valid assignments and test which option holds in all of them.""",
    "solving": """Let's solve the constraint satisfaction problem following the plan.
Step 1: The three girls must occupy lockers 1, 2, and 3, one each, since at least one girl sits in each and there are exactly three girls.
Step 2: Fred occupies locker 3, so the girl in locker 3 shares with Fred; Rachel cannot share, so Rachel is in locker 1 or 2 alone.
Step 3: Nita and Trisha sit in {1, 2, 3} with |nita - trisha| != 1, forcing them into lockers 1 and 3 and Rachel into locker 2.
Step 4: Juan must share with a girl; locker 3 is full and Rachel cannot share, so Juan shares locker 1.
Step 5: Marc and Paul fill lockers 4 and 5. Option A holds in every valid assignment.
Therefore, the final answer is A.
Final answer: {A}""",
    "verification": """Context verification: the constraints correctly encode one-or-two children per locker (same-gender pairs excluded, so no locker can hold three), Rachel's solo locker, Juan's shared locker, the adjacency exclusion, and the question condition.
Solving verification: if Juan were not in locker 1, he could not share with any girl: locker 3 is taken by Fred and a girl, Rachel is alone in locker 2, and lockers 4 and 5 hold no girls. Every valid assignment therefore places Juan in locker 1 with a girl.
Upon verification, we found that Option A indeed is the only possible answer. Thus, the answer A should remain unchanged.""",
    "cot": """The first three lockers go to girls, one each, and Fred is in locker 3, sharing with a girl. Rachel cannot share, so she is alone in locker 1 or 2. Nita and Trisha cannot be adjacent, so within lockers 1-3 they take lockers 1 and 3, leaving Rachel locker 2. Juan must share with a girl, and the only girl with space is in locker 1. Therefore, the final answer is A.
The correct option is: A)""",
    "naive": "Answer: {A}",
}

_TOURS = {
    "id": "arlsat-company-tours",
    "dataset": "ARLSAT",
    "context": """During a single week, from Monday through Friday, tours will be conducted of a company's three divisions — Operations, Production, and Sales. Exactly five tours will be conducted that week, one each day. The schedule of tours for the week must conform to the following restrictions: Each division is toured at least once. The Operations division is not toured on Monday. The Production division is not toured on Wednesday. The Sales division is toured on two consecutive days, and on no other days. If the Operations division is toured on Thursday, then the Production division is toured on Friday.""",
    "question": "Which one of the following CANNOT be true of the week's tour schedule?",
    "options": [
        ("A", "The division that is toured on Monday is also toured on Tuesday."),
        ("B", "The division that is toured on Monday is also toured on Friday."),
        ("C", "The division that is toured on Tuesday is also toured on Thursday."),
        ("D", "The division that is toured on Wednesday is also toured on Friday."),
        ("E", "The division that is toured on Thursday is also toured on Friday."),
    ],
    "gold": "C",
    "translation": """Domain:
1: Operations
3: Sales
Variables:
monday ∈ {1, 2, 3}
tuesday ∈ {1, 2, 3}
wednesday ∈ {1, 2, 3}
thursday ∈ {1, 2, 3}
friday ∈ {1, 2, 3}
Constraints:
monday == 1 or tuesday == 1 or wednesday == 1 or thursday == 1 or friday == 1 ::: Operations is toured at least once.
monday == 2 or tuesday == 2 or wednesday == 2 or thursday == 2 or friday == 2 ::: Production is toured at least once.
monday == 3 or tuesday == 3 or wednesday == 3 or thursday == 3 or friday == 3 ::: Sales is toured at least once.
monday != 1 ::: The Operations division is not toured on Monday.
wednesday != 2 ::: The Production division is not toured on Wednesday.
(monday == 3 and tuesday == 3 and wednesday != 3 and thursday != 3 and friday != 3) or (tuesday == 3 and wednesday == 3 and monday != 3 and thursday != 3 and friday != 3) or (wednesday == 3 and thursday == 3 and monday != 3 and tuesday != 3 and friday != 3) or (thursday == 3 and friday == 3 and monday != 3 and tuesday != 3 and wednesday != 3) ::: Sales is toured on two consecutive days and on no other days.
thursday == 1 -> friday == 2 ::: If Operations is toured on Thursday, then Production is toured on Friday.
Query:
A) monday == tuesday ::: The division toured on Monday is also toured on Tuesday.
B) monday == friday ::: The division toured on Monday is also toured on Friday.
C) tuesday == thursday ::: The division toured on Tuesday is also toured on Thursday.
D) wednesday == friday ::: The division toured on Wednesday is also toured on Friday.
E) thursday == friday ::: The division toured on Thursday is also toured on Friday.""",
    "plan": """1. Identify one variable per weekday over the three divisions.
2. Apply the at-least-once constraints and the forbidden day constraints.
3. Encode the Sales block as one of the four consecutive-day pairs with no Sales elsewhere.
4. Apply the Thursday-Operations conditional.
5. For each option, test whether any valid schedule satisfies it; the answer is the option no schedule satisfies.""",
    "solving": """Let's solve the constraint satisfaction problem following the plan.
Step 1: Every Sales placement is a consecutive pair: Mon-Tue, Tue-Wed, Wed-Thu, or Thu-Fri, and each pair contains Tuesday or Thursday.
Step 2: If Tuesday and Thursday hosted the same division, that division is not Sales (the pair would not be consecutive), yet every Sales pair uses Tuesday or Thursday, a contradiction.
Step 3: Checking the remaining options against concrete schedules shows each of A, B, D, and E can hold in some valid schedule.
Therefore, the final answer is C.
Final answer: {C}""",
    "verification": """Context verification: the domain maps 1 to Operations, 2 to Production, 3 to Sales; the Sales block is correctly encoded as exactly one consecutive pair with no other Sales day; the conditional and the forbidden days match the natural language.
Solving verification: a Tuesday-Thursday match is impossible: as Sales it would be non-consecutive, and as a non-Sales division it would leave no legal slot for the Sales pair. Sample schedules confirm A, B, D, and E are each possible.
Upon verification, the answer C remains unchanged.
Final answer: {C}""",
    "cot": """Sales must occupy exactly two consecutive days, and every consecutive pair of weekdays includes Tuesday or Thursday. If the same division were toured on both Tuesday and Thursday, it could not be Sales, since those days are not consecutive; but then the Sales pair would have to avoid both Tuesday and Thursday, which no consecutive pair does. Therefore, the final answer is C.
The correct option is: C)""",
    "naive": "Answer: {C}",
}

ITEMS = [
    _ALEX,
    _MAX,
    _ANNE,
    _TIGER,
    _MIROSLAV,
    _BLAKE,
    _HARRY,
    _HAWK,
    _BEN,
    _CARS,
    _BIRDS,
    _LOCKERS,
    _TOURS,
]
