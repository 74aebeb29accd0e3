// Tag inventory for Spanish morphosyntactic annotation. One row per tag, in
// listing order. Descriptions are kept verbatim apart from spelling fixes
// ("thrid", "possissive", "femenine", "Pural").
#include "spantag/tagset.hpp"

namespace spantag {

namespace {

constexpr RawRegistryRow kRows[] = {
    {"IQUEST", "category=punctuation|subcategory=question-inverted",
     "Punctuation tag - question mark (inverted)", "¿", ""},
    {"IEXCL", "category=punctuation|subcategory=exclamation-inverted",
     "Punctuation tag - exclamation mark (inverted)", "¡", ""},
    {"!", "category=punctuation|subcategory=exclamation",
     "Punctuation tag - exclamation mark", "!", ""},
    {"\"", "category=punctuation|subcategory=quotes",
     "Punctuation tag - quotes", "\"", ""},
    {"(", "category=punctuation|subcategory=left-bracket",
     "Punctuation tag - left bracket", "(", ""},
    {")", "category=punctuation|subcategory=right-bracket",
     "Punctuation tag - right bracket", ")", ""},
    {",", "category=punctuation|subcategory=comma",
     "Punctuation tag - comma", ",", ""},
    {"-", "category=punctuation|subcategory=dash",
     "Punctuation tag - dash", "-", ""},
    {".", "category=punctuation|subcategory=full-stop",
     "Punctuation tag - full-stop", ".", ""},
    {"...", "category=punctuation|subcategory=ellipsis",
     "Punctuation tag - ellipsis", "...", ""},
    {":", "category=punctuation|subcategory=colon",
     "Punctuation tag - colon", ":", ""},
    {";", "category=punctuation|subcategory=semicolon",
     "Punctuation tag - semicolon", ";", ""},
    {"?", "category=punctuation|subcategory=question",
     "Punctuation tag - question mark", "?", ""},
    {"ADJCP", "category=adjective|degree=comparative|gender=underspecified|number=plural",
     "Plural general comparative adjective", "mayores, menores", ""},
    {"ADJCS", "category=adjective|degree=comparative|gender=underspecified|number=singular",
     "Singular general comparative adjective", "mayor, menor", ""},
    {"ADJGFP", "category=adjective|degree=positive|gender=feminine|number=plural",
     "Feminine plural general positive adjective", "", ""},
    {"ADJGFS", "category=adjective|degree=positive|gender=feminine|number=singular",
     "Feminine singular general positive adjective", "", ""},
    {"ADJGMP", "category=adjective|degree=positive|gender=masculine|number=plural",
     "Masculine plural general positive adjective", "", ""},
    {"ADJGMS", "category=adjective|degree=positive|gender=masculine|number=singular",
     "Masculine singular general positive adjective", "", ""},
    {"ADJSFP", "category=adjective|degree=superlative|gender=feminine|number=plural",
     "Feminine plural general superlative adjective", "máximas, mínimas", ""},
    {"ADJSFS", "category=adjective|degree=superlative|gender=feminine|number=singular",
     "Feminine singular general superlative adjective", "máxima, mínima", ""},
    {"ADJSMP", "category=adjective|degree=superlative|gender=masculine|number=plural",
     "Masculine plural general superlative adjective", "máximos, mínimos", ""},
    {"ADJSMS", "category=adjective|degree=superlative|gender=masculine|number=singular",
     "Masculine singular general superlative adjective", "máximo, mínimo, grandísimo", ""},
    {"ADVGR", "category=adverb|degree=positive|subcategory=degree",
     "Positive degree adverb", "muy, demasiado, mucho", "read as degree=positive within the degree subcategory; a separate degree-adverb class is the other possible reading"},
    {"ADVGRC", "category=adverb|degree=comparative|subcategory=degree",
     "Comparative degree adverb", "más, menos", ""},
    {"ADVGRS", "category=adverb|degree=superlative|subcategory=degree",
     "Superlative degree adverb", "abundantísimamente", ""},
    {"ADVINT", "category=adverb|subcategory=interrogative",
     "Interrogative adverb", "cómo", ""},
    {"ADVL", "category=adverb|directionality=underspecified|subcategory=locative",
     "Locative adverb underspecified for directionality", "abajo", ""},
    {"ADVLD", "category=adverb|directionality=dynamic|subcategory=locative",
     "Dynamic locative adverb", "adelante", ""},
    {"ADVLE", "category=adverb|directionality=static|subcategory=locative",
     "Static locative adverb", "dentro", ""},
    {"ADVLIN", "category=adverb|subcategory=locative-interrogative",
     "Interrogative locative adverb", "dónde", ""},
    {"ADVLP", "category=adverb|deixis=proximal|subcategory=locative",
     "Locative adverb with proximal deixis", "aquí", ""},
    {"ADVLR", "category=adverb|deixis=remote|subcategory=locative",
     "Locative adverb with remote deixis", "allí", ""},
    {"ADVLRD", "category=adverb|directionality=dynamic|subcategory=locative-relative",
     "Relative dynamic locative adverb", "adonde", ""},
    {"ADVLRE", "category=adverb|directionality=underspecified|subcategory=locative-relative",
     "Relative locative adverb underspecified for directionality", "donde", ""},
    {"ADVN", "category=adverb|subcategory=general",
     "General adverb", "salvajemente, bien, probablemente", ""},
    {"ADVNEG", "category=adverb|polarity=negative|subcategory=general",
     "General negative adverb", "tampoco", ""},
    {"ADVMRE", "category=adverb|subcategory=modal-relative",
     "Relative modal adverb", "como", ""},
    {"ADVT", "category=adverb|subcategory=temporal",
     "Temporal adverb", "ahora, ayer", ""},
    {"ADVTIN", "category=adverb|subcategory=temporal-interrogative",
     "Interrogative temporal adverb", "cuándo", ""},
    {"ADVTNE", "category=adverb|polarity=negative|subcategory=temporal",
     "Negative temporal adverb", "nunca", ""},
    {"ADVTRE", "category=adverb|subcategory=temporal-relative",
     "Relative temporal adverb", "cuando", ""},
    {"ALFP", "category=alphabet-letter|number=plural",
     "Plural letter of the alphabet", "As, Aes, bes", ""},
    {"ALFS", "category=alphabet-letter|number=singular",
     "Singular letter of the alphabet", "A, b", ""},
    {"ARCAFS", "category=article|gender=feminine|number=singular|pronominal-function=capable-of-pronominal|subcategory=indefinite-cardinal",
     "Feminine singular indefinite article and cardinal capable of pronominal function", "una", ""},
    {"ARCAMS", "category=article|gender=masculine|number=singular|pronominal-function=non-pronominal|subcategory=indefinite-cardinal",
     "Masculine singular indefinite article and non pronominal cardinal", "un", ""},
    {"ARTDFP", "category=article|gender=feminine|number=plural|subcategory=definite",
     "Feminine plural definite article", "las", ""},
    {"ARTDFS", "category=article|gender=feminine|number=singular|subcategory=definite",
     "Feminine singular definite article", "la", ""},
    {"ARTDMP", "category=article|gender=masculine|number=plural|subcategory=definite",
     "Masculine plural definite article", "los", ""},
    {"ARTDMS", "category=article|gender=masculine|number=singular|subcategory=definite",
     "Masculine singular definite article", "el", ""},
    {"ARTDNS", "category=article|gender=neuter|number=singular|subcategory=definite",
     "Neuter singular definite article", "lo", ""},
    {"ARQUFP", "category=article|gender=feminine|number=plural|pronominal-function=capable-of-pronominal|subcategory=indefinite-quantifier",
     "Feminine plural indefinite article and quantifier capable of pronominal function", "unas", ""},
    {"ARQUMP", "category=article|gender=masculine|number=plural|pronominal-function=capable-of-pronominal|subcategory=indefinite-quantifier",
     "Masculine plural indefinite article and quantifier capable of pronominal function", "unos", ""},
    {"CARDGU", "category=cardinal|subcategory=hyphenated",
     "Hyphenated cardinals", "40-50, 1850-1990", ""},
    {"CARDFP", "category=cardinal|gender=feminine|number=plural|pronominal-function=capable-of-pronominal",
     "Plural feminine cardinal capable of pronominal function", "doscientas", ""},
    {"CARDMP", "category=cardinal|gender=masculine|number=plural|pronominal-function=capable-of-pronominal",
     "Plural masculine cardinal capable of pronominal function", "doscientos", ""},
    {"CARDPS", "category=cardinal|number=singular|pronominal-function=pronominal",
     "Singular pronominal cardinal", "uno", ""},
    {"CARDXP", "category=cardinal|gender=underspecified|number=plural",
     "Plural cardinal neutral for gender", "dos, tres, mil", ""},
    {"CARNMP", "category=cardinal|gender=masculine|number=plural|pronominal-function=non-pronominal",
     "Non pronominal plural masculine cardinal", "veintiún", "number recorded as plural exactly as listed, although the example form looks singular prenominal"},
    {"CC", "category=conjunction|subcategory=coordinating",
     "Coordinating conjunction", "y, o", ""},
    {"CCAD", "category=conjunction|subcategory=adversative",
     "Adversative coordinating conjunction", "pero", ""},
    {"CCNEG", "category=conjunction|subcategory=negative-coordinating",
     "Negative coordinating conjunction", "ni", ""},
    {"CODE", "category=code",
     "Alphanumeric code", "", ""},
    {"CQUE", "category=conjunction|subcategory=que",
     "que (as conjunction)", "que", ""},
    {"CSUBF", "category=conjunction|subcategory=subordinating-finite",
     "Subordinating conjunction that introduces finite clauses", "apenas", ""},
    {"CSUBI", "category=conjunction|subcategory=subordinating-infinite",
     "Subordinating conjunction that introduces infinite clauses", "al", ""},
    {"CSUBX", "category=conjunction|subcategory=subordinating-underspecified",
     "Subordinating conjunction underspecified for subord-type", "aunque", ""},
    {"DMDPFP", "category=demonstrative|deixis=distal|gender=feminine|number=plural|pronominal-function=pronominal",
     "Pronominal feminine plural demonstrative with distal deixis", "ésas", ""},
    {"DMDPFS", "category=demonstrative|deixis=distal|gender=feminine|number=singular|pronominal-function=pronominal",
     "Pronominal feminine singular demonstrative with distal deixis", "ésa", ""},
    {"DMDPMP", "category=demonstrative|deixis=distal|gender=masculine|number=plural|pronominal-function=pronominal",
     "Pronominal masculine plural demonstrative with distal deixis", "ésos", ""},
    {"DMDPMS", "category=demonstrative|deixis=distal|gender=masculine|number=singular|pronominal-function=pronominal",
     "Pronominal masculine singular demonstrative with distal deixis", "ése", ""},
    {"DMDPNS", "category=demonstrative|deixis=distal|gender=neuter|number=singular|pronominal-function=pronominal",
     "Pronominal neuter singular demonstrative with distal deixis", "eso", ""},
    {"DMDXFP", "category=demonstrative|deixis=distal|gender=feminine|number=plural|pronominal-function=capable-of-pronominal",
     "Feminine plural demonstrative (capable of pronominal function) with distal deixis", "esas", ""},
    {"DMDXFS", "category=demonstrative|deixis=distal|gender=feminine|number=singular|pronominal-function=capable-of-pronominal",
     "Feminine singular demonstrative (capable of pronominal function) with distal deixis", "esa", ""},
    {"DMDXMP", "category=demonstrative|deixis=distal|gender=masculine|number=plural|pronominal-function=capable-of-pronominal",
     "Masculine plural demonstrative (capable of pronominal function) with distal deixis", "esos", ""},
    {"DMDXMS", "category=demonstrative|deixis=distal|gender=masculine|number=singular|pronominal-function=capable-of-pronominal",
     "Masculine singular demonstrative (capable of pronominal function) with distal deixis", "ese", ""},
    {"DMPPFP", "category=demonstrative|deixis=proximal|gender=feminine|number=plural|pronominal-function=pronominal",
     "Pronominal feminine plural demonstrative with proximal deixis", "éstas", ""},
    {"DMPPFS", "category=demonstrative|deixis=proximal|gender=feminine|number=singular|pronominal-function=pronominal",
     "Pronominal feminine singular demonstrative with proximal deixis", "ésta", ""},
    {"DMPPMP", "category=demonstrative|deixis=proximal|gender=masculine|number=plural|pronominal-function=pronominal",
     "Pronominal masculine plural demonstrative with proximal deixis", "éstos", ""},
    {"DMPPMS", "category=demonstrative|deixis=proximal|gender=masculine|number=singular|pronominal-function=pronominal",
     "Pronominal masculine singular demonstrative with proximal deixis", "éste", ""},
    {"DMPXFP", "category=demonstrative|deixis=proximal|gender=feminine|number=plural|pronominal-function=capable-of-pronominal",
     "Feminine plural demonstrative (capable of pronominal function) with proximal deixis", "estas", ""},
    {"DMPXFS", "category=demonstrative|deixis=proximal|gender=feminine|number=singular|pronominal-function=capable-of-pronominal",
     "Feminine singular demonstrative (capable of pronominal function) with proximal deixis", "esta", ""},
    {"DMPXMP", "category=demonstrative|deixis=proximal|gender=masculine|number=plural|pronominal-function=capable-of-pronominal",
     "Masculine plural demonstrative (capable of pronominal function) with proximal deixis", "estos", ""},
    {"DMPXMS", "category=demonstrative|deixis=proximal|gender=masculine|number=singular|pronominal-function=capable-of-pronominal",
     "Masculine singular demonstrative (capable of pronominal function) with proximal deixis", "este", ""},
    {"DMRPFP", "category=demonstrative|deixis=remote|gender=feminine|number=plural|pronominal-function=pronominal",
     "Pronominal feminine plural demonstrative with remote deixis", "aquéllas", ""},
    {"DMRPFS", "category=demonstrative|deixis=remote|gender=feminine|number=singular|pronominal-function=pronominal",
     "Pronominal feminine singular demonstrative with remote deixis", "aquélla", ""},
    {"DMRPMP", "category=demonstrative|deixis=remote|gender=masculine|number=plural|pronominal-function=pronominal",
     "Pronominal masculine plural demonstrative with remote deixis", "aquéllos", ""},
    {"DMRPMS", "category=demonstrative|deixis=remote|gender=masculine|number=singular|pronominal-function=pronominal",
     "Pronominal masculine singular demonstrative with remote deixis", "aquél", ""},
    {"DMRPNS", "category=demonstrative|deixis=remote|gender=neuter|number=singular|pronominal-function=pronominal",
     "Pronominal neuter singular demonstrative with remote deixis", "aquello", ""},
    {"DMRXFP", "category=demonstrative|deixis=remote|gender=feminine|number=plural|pronominal-function=capable-of-pronominal",
     "Feminine plural demonstrative (capable of pronominal function) with remote deixis", "aquellas", ""},
    {"DMRXFS", "category=demonstrative|deixis=remote|gender=feminine|number=singular|pronominal-function=capable-of-pronominal",
     "Feminine singular demonstrative (capable of pronominal function) with remote deixis", "aquella", ""},
    {"DMRXMP", "category=demonstrative|deixis=remote|gender=masculine|number=plural|pronominal-function=capable-of-pronominal",
     "Masculine plural demonstrative (capable of pronominal function) with remote deixis", "aquellos", ""},
    {"DMRXMS", "category=demonstrative|deixis=remote|gender=masculine|number=singular|pronominal-function=capable-of-pronominal",
     "Masculine singular demonstrative (capable of pronominal function) with remote deixis", "aquel", ""},
    {"DMPPNS", "category=demonstrative|deixis=proximal|gender=neuter|number=singular|pronominal-function=pronominal",
     "Pronominal neuter singular demonstrative with proximal deixis", "esto", ""},
    {"FO", "category=formula",
     "Formula", "", ""},
    {"INTPXP", "category=interrogative|animacy=animate|gender=underspecified|number=plural|pronominal-function=pronominal",
     "Plural interrogative pronoun for animates neutral for gender", "quiénes", ""},
    {"INTPXS", "category=interrogative|animacy=animate|gender=underspecified|number=singular|pronominal-function=pronominal",
     "Singular interrogative pronoun for animates neutral for gender", "quién", ""},
    {"INTXXX", "category=interrogative|gender=underspecified|number=underspecified|pronominal-function=capable-of-pronominal",
     "Interrogative capable of pronominal function neutral for gender and number", "qué", ""},
    {"INTXFP", "category=interrogative|gender=feminine|number=plural|pronominal-function=capable-of-pronominal",
     "Feminine plural interrogative capable of pronominal function", "cuántas", ""},
    {"INTXFS", "category=interrogative|animacy=inanimate|gender=feminine|number=singular|pronominal-function=capable-of-pronominal",
     "Feminine singular interrogative capable of pronominal function for inanimates", "cuánta", ""},
    {"INTXMP", "category=interrogative|gender=masculine|number=plural|pronominal-function=capable-of-pronominal",
     "Masculine plural interrogative capable of pronominal function", "cuántos", ""},
    {"INTXMS", "category=interrogative|animacy=inanimate|gender=masculine|number=singular|pronominal-function=capable-of-pronominal",
     "Masculine and neuter singular interrogative capable of pronominal function for inanimates", "cuánto", "listed as masculine and neuter; recorded with gender=masculine"},
    {"INTXXP", "category=interrogative|gender=underspecified|number=plural|pronominal-function=capable-of-pronominal",
     "Plural interrogative neutral for gender capable of pronominal function", "cuáles", ""},
    {"INTXXS", "category=interrogative|gender=underspecified|number=singular|pronominal-function=capable-of-pronominal",
     "Singular interrogative neutral for gender capable of pronominal function", "cuál", ""},
    {"ITJN", "category=interjection",
     "Interjection", "oh, ja", ""},
    {"NCFP", "category=noun|gender=feminine|number=plural|subcategory=common",
     "Feminine plural common noun", "mesas, manos", ""},
    {"NCFS", "category=noun|gender=feminine|number=singular|subcategory=common",
     "Feminine singular common noun", "mesa, mano", ""},
    {"NCMP", "category=noun|gender=masculine|number=plural|subcategory=common",
     "Masculine plural common noun", "libros, ordenadores", ""},
    {"NCMS", "category=noun|gender=masculine|number=singular|subcategory=common",
     "Masculine singular common noun", "libro, ordenador", ""},
    {"NEG", "category=negation",
     "Negation", "", ""},
    {"NLOCFP", "category=noun|gender=feminine|number=plural|subcategory=locative",
     "Feminine plural locative noun", "islas, avenidas", ""},
    {"NLOCFS", "category=noun|gender=feminine|number=singular|subcategory=locative",
     "Feminine singular locative noun", "isla, calle", ""},
    {"NLOCMP", "category=noun|gender=masculine|number=plural|subcategory=locative",
     "Masculine plural locative noun", "montes", ""},
    {"NLOCMS", "category=noun|gender=masculine|number=singular|subcategory=locative",
     "Masculine singular locative noun", "monte", ""},
    {"NMEAFP", "category=noun|gender=feminine|number=plural|subcategory=measure",
     "Feminine plural unit of measure noun", "hectáreas, micras", ""},
    {"NMEAFS", "category=noun|gender=feminine|number=singular|subcategory=measure",
     "Feminine singular unit of measure noun", "hectárea, micra", ""},
    {"NMEAMP", "category=noun|gender=masculine|number=plural|subcategory=measure",
     "Masculine plural unit of measure noun", "metros, litros", ""},
    {"NMEAMS", "category=noun|gender=masculine|number=singular|subcategory=measure",
     "Masculine singular unit of measure noun", "metro, litro", ""},
    {"NNUMFP", "category=noun|gender=feminine|number=plural|subcategory=numeral",
     "Feminine plural numeral noun", "docenas", ""},
    {"NNUMFS", "category=noun|gender=feminine|number=singular|subcategory=numeral",
     "Feminine singular numeral noun", "docena", ""},
    {"NNUMMP", "category=noun|gender=masculine|number=plural|subcategory=numeral",
     "Masculine plural numeral noun", "millares", ""},
    {"NNUMMS", "category=noun|gender=masculine|number=singular|subcategory=numeral",
     "Masculine singular numeral noun", "millar, tercio", ""},
    {"NORGFP", "category=noun|gender=feminine|number=plural|subcategory=organization",
     "Feminine plural organization noun", "confederaciones", ""},
    {"NORGFS", "category=noun|gender=feminine|number=singular|subcategory=organization",
     "Feminine singular organization noun", "confederación", ""},
    {"NORGMP", "category=noun|gender=masculine|number=plural|subcategory=organization",
     "Masculine plural organization noun", "gobiernos, comités", ""},
    {"NORGMS", "category=noun|gender=masculine|number=singular|subcategory=organization",
     "Masculine singular organization noun", "consejo, departamento", ""},
    {"NPAFP", "category=noun|gender=feminine|number=plural|subcategory=anthroponym",
     "Feminine plural proper anthroponymous noun", "Marías", ""},
    {"NPAFS", "category=noun|gender=feminine|number=singular|subcategory=anthroponym",
     "Feminine singular proper anthroponymous noun", "María", ""},
    {"NPAMP", "category=noun|gender=masculine|number=plural|subcategory=anthroponym",
     "Masculine plural proper anthroponymous noun", "Juanes", ""},
    {"NPAMS", "category=noun|gender=masculine|number=singular|subcategory=anthroponym",
     "Masculine singular proper anthroponymous noun", "Juan", ""},
    {"NPAXX", "category=noun|gender=underspecified|number=underspecified|subcategory=anthroponym",
     "Proper anthroponymous noun neutral for gender and number", "Rodríguez, Sanchís", ""},
    {"NPTOP", "category=noun|number=plural|subcategory=toponym-or-org",
     "Plural proper toponym or organization noun", "Coreas", ""},
    {"NPTOS", "category=noun|number=singular|subcategory=toponym-or-org",
     "Singular proper toponym or organization noun", "IBM, Madrid", ""},
    {"NPTP", "category=noun|number=plural|subcategory=toponym",
     "Plural proper toponym noun", "Pirineos", ""},
    {"NPTS", "category=noun|number=singular|subcategory=toponym",
     "Singular proper toponym noun", "Guadalquivir", ""},
    {"NTMPFP", "category=noun|gender=feminine|number=plural|subcategory=temporal",
     "Feminine plural temporal noun", "semanas, quincenas", ""},
    {"NTMPFS", "category=noun|gender=feminine|number=singular|subcategory=temporal",
     "Feminine singular temporal noun", "semana, quincena", ""},
    {"NTMPMP", "category=noun|gender=masculine|number=plural|subcategory=temporal",
     "Masculine plural temporal noun", "días, años", ""},
    {"NTMPMS", "category=noun|gender=masculine|number=singular|subcategory=temporal",
     "Masculine singular temporal noun", "día, año", ""},
    {"ORDNMS", "category=ordinal|gender=masculine|number=singular|pronominal-function=non-pronominal",
     "Masculine singular non pronominal ordinal", "primer, tercer", ""},
    {"ORDXFP", "category=ordinal|gender=feminine|number=plural|pronominal-function=capable-of-pronominal",
     "Feminine plural ordinal capable of pronominal function", "primeras, segundas", ""},
    {"ORDXFS", "category=ordinal|gender=feminine|number=singular|pronominal-function=capable-of-pronominal",
     "Feminine singular ordinal capable of pronominal function", "primera, segunda", ""},
    {"ORDXMP", "category=ordinal|gender=masculine|number=plural|pronominal-function=capable-of-pronominal",
     "Masculine plural ordinal capable of pronominal function", "primeros, segundos", ""},
    {"ORDXMS", "category=ordinal|gender=masculine|number=singular|pronominal-function=capable-of-pronominal",
     "Masculine singular ordinal capable of pronominal function", "primero, segundo", ""},
    {"PAL", "category=portmanteau|subcategory=a-el",
     "Portmanteau word formed by a and el", "al", ""},
    {"PDEL", "category=portmanteau|subcategory=de-el",
     "Portmanteau word formed by de and el", "del", ""},
    {"PE", "category=foreign-word",
     "Foreign word", "", ""},
    {"PNC", "category=unclassified",
     "Unclassified word", "", ""},
    {"PPC1P", "category=pronoun|case-role=direct-or-indirect-object|number=plural|person=first|subcategory=personal-clitic",
     "Clitic personal pronoun, first person plural DO/IO", "nos", ""},
    {"PPC1S", "category=pronoun|case-role=direct-or-indirect-object|number=singular|person=first|subcategory=personal-clitic",
     "Clitic personal pronoun, first person singular DO/IO", "me", ""},
    {"PPC2P", "category=pronoun|case-role=direct-or-indirect-object|number=plural|person=second|subcategory=personal-clitic",
     "Clitic personal pronoun, second person plural DO/IO", "os", ""},
    {"PPC2S", "category=pronoun|case-role=direct-or-indirect-object|number=singular|person=second|subcategory=personal-clitic",
     "Clitic personal pronoun, second person singular DO/IO", "te", ""},
    {"PPC3P", "category=pronoun|case-role=direct-or-indirect-object|number=plural|person=third|subcategory=personal-clitic",
     "Clitic personal pronoun, third person plural DO/IO", "les", ""},
    {"PPC3S", "category=pronoun|case-role=direct-or-indirect-object|number=singular|person=third|subcategory=personal-clitic",
     "Clitic personal pronoun, third person singular DO/IO", "le", ""},
    {"PPN1S", "category=pronoun|case-role=nominative|number=singular|person=first|subcategory=personal",
     "Personal pronoun, first person singular nominative", "yo", ""},
    {"PPN2S", "category=pronoun|case-role=nominative|number=singular|person=second|subcategory=personal",
     "Personal pronoun, second person singular nominative", "tú", ""},
    {"PPO3FP", "category=pronoun|case-role=direct-object|gender=feminine|number=plural|person=third|subcategory=personal-clitic",
     "Clitic personal pronoun, feminine third person plural DO", "las", ""},
    {"PPO3FS", "category=pronoun|case-role=direct-object|gender=feminine|number=singular|person=third|subcategory=personal-clitic",
     "Clitic personal pronoun, feminine third person singular DO", "la", ""},
    {"PPO3MP", "category=pronoun|case-role=direct-object|gender=masculine|number=plural|person=third|subcategory=personal-clitic",
     "Clitic personal pronoun, masculine third person plural DO", "los", ""},
    {"PPO3XS", "category=pronoun|case-role=direct-object|gender=underspecified|number=singular|person=third|subcategory=personal-clitic",
     "Clitic personal pronoun, masculine or neuter third person singular DO", "lo", "listed as masculine or neuter; recorded with gender=underspecified"},
    {"PPOSFP", "category=pronoun|gender=feminine|number=plural|possessive-position=full-form|subcategory=possessive",
     "Feminine plural possessive pronoun", "tuyas, suyas", ""},
    {"PPOSFS", "category=pronoun|gender=feminine|number=singular|possessive-position=full-form|subcategory=possessive",
     "Feminine singular possessive pronoun", "mía, tuya", ""},
    {"PPOSMP", "category=pronoun|gender=masculine|number=plural|possessive-position=full-form|subcategory=possessive",
     "Masculine plural possessive pronoun", "míos, tuyos", ""},
    {"PPOSMS", "category=pronoun|gender=masculine|number=singular|possessive-position=full-form|subcategory=possessive",
     "Masculine singular possessive pronoun", "tuyo, suyo", ""},
    {"PPOSPP", "category=pronoun|number=plural|possessive-position=prenominal|subcategory=possessive",
     "Plural prenominal possessive pronoun", "mis, tus, sus", ""},
    {"PPOSPS", "category=pronoun|number=singular|possessive-position=prenominal|subcategory=possessive",
     "Singular prenominal possessive pronoun", "mi, tu, su", ""},
    {"PPP1S", "category=pronoun|case-role=oblique|number=singular|person=first|subcategory=personal",
     "Personal pronoun, first person singular oblique", "mí", ""},
    {"PPP2S", "category=pronoun|case-role=oblique|number=singular|person=second|subcategory=personal",
     "Personal pronoun, second person singular oblique", "ti", ""},
    {"PPP3X", "category=pronoun|case-role=oblique|number=underspecified|person=third|subcategory=personal",
     "Personal pronoun, third person neutral for number oblique", "sí", ""},
    {"PPX1FP", "category=pronoun|case-role=nominative-or-oblique|gender=feminine|number=plural|person=first|subcategory=personal",
     "Personal pronoun, feminine first person plural nominative or oblique", "nosotras", ""},
    {"PPX1MP", "category=pronoun|case-role=nominative-or-oblique|gender=masculine|number=plural|person=first|subcategory=personal",
     "Personal pronoun, masculine first person plural nominative or oblique", "nosotros", ""},
    {"PPX2FP", "category=pronoun|case-role=nominative-or-oblique|gender=feminine|number=plural|person=second|subcategory=personal",
     "Personal pronoun, feminine second person plural nominative or oblique", "vosotras", ""},
    {"PPX2MP", "category=pronoun|case-role=nominative-or-oblique|gender=masculine|number=plural|person=second|subcategory=personal",
     "Personal pronoun, masculine second person plural nominative or oblique", "vosotros", ""},
    {"PPX3FP", "category=pronoun|case-role=nominative-or-oblique|gender=feminine|number=plural|person=third|subcategory=personal",
     "Personal pronoun, feminine third person plural nominative or oblique", "ellas", ""},
    {"PPX3FS", "category=pronoun|case-role=nominative-or-oblique|gender=feminine|number=singular|person=third|subcategory=personal",
     "Personal pronoun, feminine third person singular nominative or oblique", "ella", ""},
    {"PPX3MP", "category=pronoun|case-role=nominative-or-oblique|gender=masculine|number=plural|person=third|subcategory=personal",
     "Personal pronoun, masculine third person plural nominative or oblique", "ellos", ""},
    {"PPX3MS", "category=pronoun|case-role=nominative-or-oblique|gender=masculine|number=singular|person=third|subcategory=personal",
     "Personal pronoun, masculine third person singular nominative or oblique", "él", ""},
    {"PPX3NS", "category=pronoun|case-role=nominative-or-oblique|gender=neuter|number=singular|person=third|subcategory=personal",
     "Personal pronoun, neuter third person singular nominative or oblique", "ello", ""},
    {"PPXT2P", "category=pronoun|case-role=nominative-or-oblique|number=plural|person=second|politeness=polite|subcategory=personal",
     "Personal pronoun, second person plural polite nominative or oblique", "ustedes", ""},
    {"PPXT2S", "category=pronoun|case-role=nominative-or-oblique|number=singular|person=second|politeness=polite|subcategory=personal",
     "Personal pronoun, second person singular polite nominative or oblique", "usted", ""},
    {"PREP", "category=preposition",
     "Preposition", "", ""},
    {"PREPN", "category=preposition|polarity=negative",
     "Negative preposition", "sin", ""},
    {"QUDF", "category=quantifier|gender=feminine|number=plural|subcategory=distributive",
     "Feminine plural distributive quantifier", "sendas", ""},
    {"QUDM", "category=quantifier|gender=masculine|number=plural|subcategory=distributive",
     "Masculine plural distributive quantifier", "sendos", ""},
    {"QUDX", "category=quantifier|gender=underspecified|number=underspecified|subcategory=distributive",
     "Distributive quantifier neutral for gender and number", "cada", ""},
    {"QUPMUL", "category=quantifier|number=singular|pronominal-function=pronominal|subcategory=multiplicative",
     "Singular pronominal quantifier that indicates multiples", "doble, triple", ""},
    {"QUNFP", "category=quantifier|gender=feminine|number=plural|pronominal-function=non-pronominal",
     "Feminine plural non pronominal quantifier", "diversas", ""},
    {"QUNFS", "category=quantifier|gender=feminine|number=singular|pronominal-function=non-pronominal",
     "Feminine singular non pronominal quantifier", "cualquier", ""},
    {"QUNMP", "category=quantifier|gender=masculine|number=plural|pronominal-function=non-pronominal",
     "Masculine plural non pronominal quantifier", "diversos", ""},
    {"QUNMS", "category=quantifier|gender=masculine|number=singular|pronominal-function=non-pronominal",
     "Masculine singular non pronominal quantifier", "algún", ""},
    {"QUNNMS", "category=quantifier|gender=masculine|number=singular|polarity=negative|pronominal-function=non-pronominal",
     "Masculine singular non pronominal quantifier with negative polarity", "ningún", ""},
    {"QUPA", "category=quantifier|animacy=animate|number=singular|pronominal-function=pronominal",
     "Singular pronominal quantifier for animates", "alguien", ""},
    {"QUPI", "category=quantifier|animacy=inanimate|number=singular|pronominal-function=pronominal",
     "Singular pronominal quantifier for inanimates", "algo", ""},
    {"QUPNA", "category=quantifier|animacy=animate|number=singular|polarity=negative|pronominal-function=pronominal",
     "Singular pronominal quantifier for animates with negative polarity", "nadie", ""},
    {"QUPNI", "category=quantifier|animacy=inanimate|gender=masculine|number=singular|polarity=negative|pronominal-function=pronominal",
     "Masculine singular pronominal quantifier for inanimates with negative polarity", "nada", ""},
    {"QUPNX", "category=quantifier|animacy=underspecified|gender=masculine|number=singular|polarity=negative|pronominal-function=pronominal",
     "Masculine singular pronominal quantifier with negative polarity underspecified for animates and inanimates", "ninguno", ""},
    {"QUXFP", "category=quantifier|gender=feminine|number=plural|pronominal-function=capable-of-pronominal",
     "Feminine plural quantifier capable of pronominal function", "todas, algunas, cualesquiera", ""},
    {"QUXFS", "category=quantifier|gender=feminine|number=singular|pronominal-function=capable-of-pronominal",
     "Feminine singular quantifier capable of pronominal function", "toda, alguna, cualquiera", ""},
    {"QUXMP", "category=quantifier|gender=masculine|number=plural|pronominal-function=capable-of-pronominal",
     "Masculine plural quantifier capable of pronominal function", "todos, algunos, cualesquiera", ""},
    {"QUXMS", "category=quantifier|gender=masculine|number=singular|pronominal-function=capable-of-pronominal",
     "Masculine singular quantifier capable of pronominal function", "todo, alguno, cualquiera", ""},
    {"QUXNFP", "category=quantifier|gender=feminine|number=plural|polarity=negative|pronominal-function=capable-of-pronominal",
     "Feminine plural quantifier capable of pronominal function with negative polarity", "ningunas", ""},
    {"QUXNFS", "category=quantifier|gender=feminine|number=singular|polarity=negative|pronominal-function=capable-of-pronominal",
     "Feminine singular quantifier capable of pronominal function with negative polarity", "ninguna", ""},
    {"QUXNMP", "category=quantifier|gender=masculine|number=plural|polarity=negative|pronominal-function=capable-of-pronominal",
     "Masculine plural quantifier capable of pronominal function with negative polarity", "ningunos", ""},
    {"RELPFP", "category=relative|gender=feminine|number=plural|pronominal-function=pronominal|subcategory=possessive",
     "Feminine plural possessive relative pronoun", "cuyas", ""},
    {"RELPFS", "category=relative|gender=feminine|number=singular|pronominal-function=pronominal|subcategory=possessive",
     "Feminine singular possessive relative pronoun", "cuya", ""},
    {"RELPMP", "category=relative|gender=masculine|number=plural|pronominal-function=pronominal|subcategory=possessive",
     "Masculine plural possessive relative pronoun", "cuyos", ""},
    {"RELPMS", "category=relative|gender=masculine|number=singular|pronominal-function=pronominal|subcategory=possessive",
     "Masculine singular possessive relative pronoun", "cuyo", ""},
    {"RELPXP", "category=relative|animacy=animate|gender=underspecified|number=plural|pronominal-function=pronominal",
     "Plural relative pronoun for animates, neutral for gender", "quienes", ""},
    {"RELPXS", "category=relative|animacy=animate|gender=underspecified|number=singular|pronominal-function=pronominal",
     "Singular relative pronoun for animates, neutral for gender", "quien", ""},
    {"RELXFP", "category=relative|gender=feminine|number=plural|pronominal-function=capable-of-pronominal",
     "Feminine plural relative pronoun capable of pronominal function", "cuantas", ""},
    {"RELXFS", "category=relative|gender=feminine|number=singular|pronominal-function=capable-of-pronominal",
     "Feminine singular relative pronoun capable of pronominal function", "cuanta", ""},
    {"RELXMP", "category=relative|gender=masculine|number=plural|pronominal-function=capable-of-pronominal",
     "Masculine plural relative pronoun capable of pronominal function", "cuantos", ""},
    {"RELXMS", "category=relative|gender=masculine|number=singular|pronominal-function=capable-of-pronominal",
     "Masculine singular relative pronoun capable of pronominal function", "cuanto", ""},
    {"SE", "category=se-particle",
     "Se (as particle)", "se", ""},
    {"TRATF", "category=title-noun|gender=feminine",
     "Feminine noun of title", "Sra., Dña., Exma.", ""},
    {"TRATM", "category=title-noun|gender=masculine",
     "Masculine noun of title", "Sr., D., Prof., Exmo.", ""},
    {"UMFX", "category=unit-of-measure|gender=feminine|number=underspecified",
     "Feminine unit of measurement, neutral for number", "pta.", ""},
    {"UMMX", "category=unit-of-measure|gender=masculine|number=underspecified",
     "Masculine unit of measurement, neutral for number", "cm.", ""},
    {"VECI1P", "category=verb|mood=indicative|number=plural|person=first|tense=conditional|verb-class=estar",
     "Verb estar. Indicative conditional tense first person plural", "", ""},
    {"VECI1S", "category=verb|mood=indicative|number=singular|person=first|tense=conditional|verb-class=estar",
     "Verb estar. Indicative conditional tense first person singular", "", ""},
    {"VECI2P", "category=verb|mood=indicative|number=plural|person=second|tense=conditional|verb-class=estar",
     "Verb estar. Indicative conditional tense second person plural", "", ""},
    {"VECI2S", "category=verb|mood=indicative|number=singular|person=second|tense=conditional|verb-class=estar",
     "Verb estar. Indicative conditional tense second person singular", "", ""},
    {"VECI3P", "category=verb|mood=indicative|number=plural|person=third|tense=conditional|verb-class=estar",
     "Verb estar. Indicative conditional tense third person plural", "", ""},
    {"VECI3S", "category=verb|mood=indicative|number=singular|person=third|tense=conditional|verb-class=estar",
     "Verb estar. Indicative conditional tense third person singular", "", ""},
    {"VEFI1P", "category=verb|mood=indicative|number=plural|person=first|tense=future|verb-class=estar",
     "Verb estar. Indicative future tense first person plural", "", ""},
    {"VEFI1S", "category=verb|mood=indicative|number=singular|person=first|tense=future|verb-class=estar",
     "Verb estar. Indicative future tense first person singular", "", ""},
    {"VEFI2P", "category=verb|mood=indicative|number=plural|person=second|tense=future|verb-class=estar",
     "Verb estar. Indicative future tense second person plural", "", ""},
    {"VEFI2S", "category=verb|mood=indicative|number=singular|person=second|tense=future|verb-class=estar",
     "Verb estar. Indicative future tense second person singular", "", ""},
    {"VEFI3P", "category=verb|mood=indicative|number=plural|person=third|tense=future|verb-class=estar",
     "Verb estar. Indicative future tense third person plural", "", ""},
    {"VEFI3S", "category=verb|mood=indicative|number=singular|person=third|tense=future|verb-class=estar",
     "Verb estar. Indicative future tense third person singular", "", ""},
    {"VEFS1P", "category=verb|mood=subjunctive|number=plural|person=first|tense=future|verb-class=estar",
     "Verb estar. Subjunctive future tense first person plural", "", ""},
    {"VEFS1S", "category=verb|mood=subjunctive|number=singular|person=first|tense=future|verb-class=estar",
     "Verb estar. Subjunctive future tense first person singular", "", ""},
    {"VEFS2P", "category=verb|mood=subjunctive|number=plural|person=second|tense=future|verb-class=estar",
     "Verb estar. Subjunctive future tense second person plural", "", ""},
    {"VEFS2S", "category=verb|mood=subjunctive|number=singular|person=second|tense=future|verb-class=estar",
     "Verb estar. Subjunctive future tense second person singular", "", ""},
    {"VEFS3P", "category=verb|mood=subjunctive|number=plural|person=third|tense=future|verb-class=estar",
     "Verb estar. Subjunctive future tense third person plural", "", ""},
    {"VEFS3S", "category=verb|mood=subjunctive|number=singular|person=third|tense=future|verb-class=estar",
     "Verb estar. Subjunctive future tense third person singular", "", ""},
    {"VEGER", "category=verb|mood=gerund|verb-class=estar",
     "Verb estar. Gerund", "", ""},
    {"VEII1P", "category=verb|mood=indicative|number=plural|person=first|tense=imperfect|verb-class=estar",
     "Verb estar. Indicative imperfect tense first person plural", "", ""},
    {"VEII1S", "category=verb|mood=indicative|number=singular|person=first|tense=imperfect|verb-class=estar",
     "Verb estar. Indicative imperfect tense first person singular", "", ""},
    {"VEII2P", "category=verb|mood=indicative|number=plural|person=second|tense=imperfect|verb-class=estar",
     "Verb estar. Indicative imperfect tense second person plural", "", ""},
    {"VEII2S", "category=verb|mood=indicative|number=singular|person=second|tense=imperfect|verb-class=estar",
     "Verb estar. Indicative imperfect tense second person singular", "", ""},
    {"VEII3P", "category=verb|mood=indicative|number=plural|person=third|tense=imperfect|verb-class=estar",
     "Verb estar. Indicative imperfect tense third person plural", "", ""},
    {"VEII3S", "category=verb|mood=indicative|number=singular|person=third|tense=imperfect|verb-class=estar",
     "Verb estar. Indicative imperfect tense third person singular", "", ""},
    {"VEINF", "category=verb|mood=infinitive|verb-class=estar",
     "Verb estar. Infinitive", "", ""},
    {"VEIS1P", "category=verb|mood=subjunctive|number=plural|person=first|tense=imperfect|verb-class=estar",
     "Verb estar. Subjunctive imperfect tense first person plural", "", ""},
    {"VEIS1S", "category=verb|mood=subjunctive|number=singular|person=first|tense=imperfect|verb-class=estar",
     "Verb estar. Subjunctive imperfect tense first person singular", "", ""},
    {"VEIS2P", "category=verb|mood=subjunctive|number=plural|person=second|tense=imperfect|verb-class=estar",
     "Verb estar. Subjunctive imperfect tense second person plural", "", ""},
    {"VEIS2S", "category=verb|mood=subjunctive|number=singular|person=second|tense=imperfect|verb-class=estar",
     "Verb estar. Subjunctive imperfect tense second person singular", "", ""},
    {"VEIS3P", "category=verb|mood=subjunctive|number=plural|person=third|tense=imperfect|verb-class=estar",
     "Verb estar. Subjunctive imperfect tense third person plural", "", ""},
    {"VEIS3S", "category=verb|mood=subjunctive|number=singular|person=third|tense=imperfect|verb-class=estar",
     "Verb estar. Subjunctive imperfect tense third person singular", "", ""},
    {"VEPI1P", "category=verb|mood=indicative|number=plural|person=first|tense=present|verb-class=estar",
     "Verb estar. Indicative present tense first person plural", "", ""},
    {"VEPI1S", "category=verb|mood=indicative|number=singular|person=first|tense=present|verb-class=estar",
     "Verb estar. Indicative present tense first person singular", "", ""},
    {"VEPI2P", "category=verb|mood=indicative|number=plural|person=second|tense=present|verb-class=estar",
     "Verb estar. Indicative present tense second person plural", "", ""},
    {"VEPI2S", "category=verb|mood=indicative|number=singular|person=second|tense=present|verb-class=estar",
     "Verb estar. Indicative present tense second person singular", "", ""},
    {"VEPI3P", "category=verb|mood=indicative|number=plural|person=third|tense=present|verb-class=estar",
     "Verb estar. Indicative present tense third person plural", "", ""},
    {"VEPI3S", "category=verb|mood=indicative|number=singular|person=third|tense=present|verb-class=estar",
     "Verb estar. Indicative present tense third person singular", "", ""},
    {"VEPM2P", "category=verb|mood=imperative|number=plural|person=second|verb-class=estar",
     "Verb estar. Imperative second person plural", "", ""},
    {"VEPM2S", "category=verb|mood=imperative|number=singular|person=second|verb-class=estar",
     "Verb estar. Imperative second person singular", "", ""},
    {"VEPS1P", "category=verb|mood=subjunctive|number=plural|person=first|tense=present|verb-class=estar",
     "Verb estar. Subjunctive present tense first person plural", "", ""},
    {"VEPS1S", "category=verb|mood=subjunctive|number=singular|person=first|tense=present|verb-class=estar",
     "Verb estar. Subjunctive present tense first person singular", "", ""},
    {"VEPS2P", "category=verb|mood=subjunctive|number=plural|person=second|tense=present|verb-class=estar",
     "Verb estar. Subjunctive present tense second person plural", "", ""},
    {"VEPS2S", "category=verb|mood=subjunctive|number=singular|person=second|tense=present|verb-class=estar",
     "Verb estar. Subjunctive present tense second person singular", "", ""},
    {"VEPS3P", "category=verb|mood=subjunctive|number=plural|person=third|tense=present|verb-class=estar",
     "Verb estar. Subjunctive present tense third person plural", "", ""},
    {"VEPS3S", "category=verb|mood=subjunctive|number=singular|person=third|tense=present|verb-class=estar",
     "Verb estar. Subjunctive present tense third person singular", "", ""},
    {"VEPX", "category=verb|mood=past-participle|verb-class=estar",
     "Verb estar. Past participle", "", ""},
    {"VEXI1P", "category=verb|mood=indicative|number=plural|person=first|tense=preterite|verb-class=estar",
     "Verb estar. Indicative preterite tense first person plural", "", ""},
    {"VEXI1S", "category=verb|mood=indicative|number=singular|person=first|tense=preterite|verb-class=estar",
     "Verb estar. Indicative preterite tense first person singular", "", ""},
    {"VEXI2P", "category=verb|mood=indicative|number=plural|person=second|tense=preterite|verb-class=estar",
     "Verb estar. Indicative preterite tense second person plural", "", ""},
    {"VEXI2S", "category=verb|mood=indicative|number=singular|person=second|tense=preterite|verb-class=estar",
     "Verb estar. Indicative preterite tense second person singular", "", ""},
    {"VEXI3P", "category=verb|mood=indicative|number=plural|person=third|tense=preterite|verb-class=estar",
     "Verb estar. Indicative preterite tense third person plural", "", ""},
    {"VEXI3S", "category=verb|mood=indicative|number=singular|person=third|tense=preterite|verb-class=estar",
     "Verb estar. Indicative preterite tense third person singular", "", ""},
    {"VHCI1P", "category=verb|mood=indicative|number=plural|person=first|tense=conditional|verb-class=haber",
     "Verb haber. Indicative conditional tense first person plural", "", ""},
    {"VHCI1S", "category=verb|mood=indicative|number=singular|person=first|tense=conditional|verb-class=haber",
     "Verb haber. Indicative conditional tense first person singular", "", ""},
    {"VHCI2P", "category=verb|mood=indicative|number=plural|person=second|tense=conditional|verb-class=haber",
     "Verb haber. Indicative conditional tense second person plural", "", ""},
    {"VHCI2S", "category=verb|mood=indicative|number=singular|person=second|tense=conditional|verb-class=haber",
     "Verb haber. Indicative conditional tense second person singular", "", ""},
    {"VHCI3P", "category=verb|mood=indicative|number=plural|person=third|tense=conditional|verb-class=haber",
     "Verb haber. Indicative conditional tense third person plural", "", ""},
    {"VHCI3S", "category=verb|mood=indicative|number=singular|person=third|tense=conditional|verb-class=haber",
     "Verb haber. Indicative conditional tense third person singular", "", ""},
    {"VHFI1P", "category=verb|mood=indicative|number=plural|person=first|tense=future|verb-class=haber",
     "Verb haber. Indicative future tense first person plural", "", ""},
    {"VHFI1S", "category=verb|mood=indicative|number=singular|person=first|tense=future|verb-class=haber",
     "Verb haber. Indicative future tense first person singular", "", ""},
    {"VHFI2P", "category=verb|mood=indicative|number=plural|person=second|tense=future|verb-class=haber",
     "Verb haber. Indicative future tense second person plural", "", ""},
    {"VHFI2S", "category=verb|mood=indicative|number=singular|person=second|tense=future|verb-class=haber",
     "Verb haber. Indicative future tense second person singular", "", ""},
    {"VHFI3P", "category=verb|mood=indicative|number=plural|person=third|tense=future|verb-class=haber",
     "Verb haber. Indicative future tense third person plural", "", ""},
    {"VHFI3S", "category=verb|mood=indicative|number=singular|person=third|tense=future|verb-class=haber",
     "Verb haber. Indicative future tense third person singular", "", ""},
    {"VHFS1P", "category=verb|mood=subjunctive|number=plural|person=first|tense=future|verb-class=haber",
     "Verb haber. Subjunctive future tense first person plural", "", ""},
    {"VHFS1S", "category=verb|mood=subjunctive|number=singular|person=first|tense=future|verb-class=haber",
     "Verb haber. Subjunctive future tense first person singular", "", ""},
    {"VHFS2P", "category=verb|mood=subjunctive|number=plural|person=second|tense=future|verb-class=haber",
     "Verb haber. Subjunctive future tense second person plural", "", ""},
    {"VHFS2S", "category=verb|mood=subjunctive|number=singular|person=second|tense=future|verb-class=haber",
     "Verb haber. Subjunctive future tense second person singular", "", ""},
    {"VHFS3P", "category=verb|mood=subjunctive|number=plural|person=third|tense=future|verb-class=haber",
     "Verb haber. Subjunctive future tense third person plural", "", ""},
    {"VHFS3S", "category=verb|mood=subjunctive|number=singular|person=third|tense=future|verb-class=haber",
     "Verb haber. Subjunctive future tense third person singular", "", ""},
    {"VHGER", "category=verb|mood=gerund|verb-class=haber",
     "Verb haber. Gerund", "", ""},
    {"VHII1P", "category=verb|mood=indicative|number=plural|person=first|tense=imperfect|verb-class=haber",
     "Verb haber. Indicative imperfect tense first person plural", "", ""},
    {"VHII1S", "category=verb|mood=indicative|number=singular|person=first|tense=imperfect|verb-class=haber",
     "Verb haber. Indicative imperfect tense first person singular", "", ""},
    {"VHII2P", "category=verb|mood=indicative|number=plural|person=second|tense=imperfect|verb-class=haber",
     "Verb haber. Indicative imperfect tense second person plural", "", ""},
    {"VHII2S", "category=verb|mood=indicative|number=singular|person=second|tense=imperfect|verb-class=haber",
     "Verb haber. Indicative imperfect tense second person singular", "", ""},
    {"VHII3P", "category=verb|mood=indicative|number=plural|person=third|tense=imperfect|verb-class=haber",
     "Verb haber. Indicative imperfect tense third person plural", "", ""},
    {"VHII3S", "category=verb|mood=indicative|number=singular|person=third|tense=imperfect|verb-class=haber",
     "Verb haber. Indicative imperfect tense third person singular", "", ""},
    {"VHINF", "category=verb|mood=infinitive|verb-class=haber",
     "Verb haber. Infinitive", "", ""},
    {"VHIS1P", "category=verb|mood=subjunctive|number=plural|person=first|tense=imperfect|verb-class=haber",
     "Verb haber. Subjunctive imperfect tense first person plural", "", ""},
    {"VHIS1S", "category=verb|mood=subjunctive|number=singular|person=first|tense=imperfect|verb-class=haber",
     "Verb haber. Subjunctive imperfect tense first person singular", "", ""},
    {"VHIS2P", "category=verb|mood=subjunctive|number=plural|person=second|tense=imperfect|verb-class=haber",
     "Verb haber. Subjunctive imperfect tense second person plural", "", ""},
    {"VHIS2S", "category=verb|mood=subjunctive|number=singular|person=second|tense=imperfect|verb-class=haber",
     "Verb haber. Subjunctive imperfect tense second person singular", "", ""},
    {"VHIS3P", "category=verb|mood=subjunctive|number=plural|person=third|tense=imperfect|verb-class=haber",
     "Verb haber. Subjunctive imperfect tense third person plural", "", ""},
    {"VHIS3S", "category=verb|mood=subjunctive|number=singular|person=third|tense=imperfect|verb-class=haber",
     "Verb haber. Subjunctive imperfect tense third person singular", "", ""},
    {"VHPI1P", "category=verb|mood=indicative|number=plural|person=first|tense=present|verb-class=haber",
     "Verb haber. Indicative present tense first person plural", "", ""},
    {"VHPI1S", "category=verb|mood=indicative|number=singular|person=first|tense=present|verb-class=haber",
     "Verb haber. Indicative present tense first person singular", "", ""},
    {"VHPI2P", "category=verb|mood=indicative|number=plural|person=second|tense=present|verb-class=haber",
     "Verb haber. Indicative present tense second person plural", "", ""},
    {"VHPI2S", "category=verb|mood=indicative|number=singular|person=second|tense=present|verb-class=haber",
     "Verb haber. Indicative present tense second person singular", "", ""},
    {"VHPI3E", "category=verb|existential=true|mood=indicative|number=singular|person=third|tense=present|verb-class=haber",
     "Verb haber. Indicative present tense third person singular existential", "", ""},
    {"VHPI3P", "category=verb|mood=indicative|number=plural|person=third|tense=present|verb-class=haber",
     "Verb haber. Indicative present tense third person plural", "", ""},
    {"VHPI3S", "category=verb|mood=indicative|number=singular|person=third|tense=present|verb-class=haber",
     "Verb haber. Indicative present tense third person singular", "", ""},
    {"VHPS1P", "category=verb|mood=subjunctive|number=plural|person=first|tense=present|verb-class=haber",
     "Verb haber. Subjunctive present tense first person plural", "", ""},
    {"VHPS1S", "category=verb|mood=subjunctive|number=singular|person=first|tense=present|verb-class=haber",
     "Verb haber. Subjunctive present tense first person singular", "", ""},
    {"VHPS2P", "category=verb|mood=subjunctive|number=plural|person=second|tense=present|verb-class=haber",
     "Verb haber. Subjunctive present tense second person plural", "", ""},
    {"VHPS2S", "category=verb|mood=subjunctive|number=singular|person=second|tense=present|verb-class=haber",
     "Verb haber. Subjunctive present tense second person singular", "", ""},
    {"VHPS3P", "category=verb|mood=subjunctive|number=plural|person=third|tense=present|verb-class=haber",
     "Verb haber. Subjunctive present tense third person plural", "", ""},
    {"VHPS3S", "category=verb|mood=subjunctive|number=singular|person=third|tense=present|verb-class=haber",
     "Verb haber. Subjunctive present tense third person singular", "", ""},
    {"VHPXFP", "category=verb|gender=feminine|mood=past-participle|number=plural|verb-class=haber",
     "Verb haber. Feminine plural past participle", "", ""},
    {"VHPXFS", "category=verb|gender=feminine|mood=past-participle|number=singular|verb-class=haber",
     "Verb haber. Feminine singular past participle", "", ""},
    {"VHPXMP", "category=verb|gender=masculine|mood=past-participle|number=plural|verb-class=haber",
     "Verb haber. Masculine plural past participle", "", ""},
    {"VHPXMS", "category=verb|gender=masculine|mood=past-participle|number=singular|verb-class=haber",
     "Verb haber. Masculine singular past participle", "", ""},
    {"VHXI1P", "category=verb|mood=indicative|number=plural|person=first|tense=preterite|verb-class=haber",
     "Verb haber. Indicative preterite tense first person plural", "", ""},
    {"VHXI1S", "category=verb|mood=indicative|number=singular|person=first|tense=preterite|verb-class=haber",
     "Verb haber. Indicative preterite tense first person singular", "", ""},
    {"VHXI2P", "category=verb|mood=indicative|number=plural|person=second|tense=preterite|verb-class=haber",
     "Verb haber. Indicative preterite tense second person plural", "", ""},
    {"VHXI2S", "category=verb|mood=indicative|number=singular|person=second|tense=preterite|verb-class=haber",
     "Verb haber. Indicative preterite tense second person singular", "", ""},
    {"VHXI3P", "category=verb|mood=indicative|number=plural|person=third|tense=preterite|verb-class=haber",
     "Verb haber. Indicative preterite tense third person plural", "", ""},
    {"VHXI3S", "category=verb|mood=indicative|number=singular|person=third|tense=preterite|verb-class=haber",
     "Verb haber. Indicative preterite tense third person singular", "", ""},
    {"VLCI1P", "category=verb|mood=indicative|number=plural|person=first|tense=conditional|verb-class=lexical",
     "Lexical verb. Indicative conditional tense first person plural", "", ""},
    {"VLCI1S", "category=verb|mood=indicative|number=singular|person=first|tense=conditional|verb-class=lexical",
     "Lexical verb. Indicative conditional tense first person singular", "", ""},
    {"VLCI2P", "category=verb|mood=indicative|number=plural|person=second|tense=conditional|verb-class=lexical",
     "Lexical verb. Indicative conditional tense second person plural", "", ""},
    {"VLCI2S", "category=verb|mood=indicative|number=singular|person=second|tense=conditional|verb-class=lexical",
     "Lexical verb. Indicative conditional tense second person singular", "", ""},
    {"VLCI3P", "category=verb|mood=indicative|number=plural|person=third|tense=conditional|verb-class=lexical",
     "Lexical verb. Indicative conditional tense third person plural", "", ""},
    {"VLCI3S", "category=verb|mood=indicative|number=singular|person=third|tense=conditional|verb-class=lexical",
     "Lexical verb. Indicative conditional tense third person singular", "", ""},
    {"VLFI1P", "category=verb|mood=indicative|number=plural|person=first|tense=future|verb-class=lexical",
     "Lexical verb. Indicative future tense first person plural", "", ""},
    {"VLFI1S", "category=verb|mood=indicative|number=singular|person=first|tense=future|verb-class=lexical",
     "Lexical verb. Indicative future tense first person singular", "", ""},
    {"VLFI2P", "category=verb|mood=indicative|number=plural|person=second|tense=future|verb-class=lexical",
     "Lexical verb. Indicative future tense second person plural", "", ""},
    {"VLFI2S", "category=verb|mood=indicative|number=singular|person=second|tense=future|verb-class=lexical",
     "Lexical verb. Indicative future tense second person singular", "", ""},
    {"VLFI3P", "category=verb|mood=indicative|number=plural|person=third|tense=future|verb-class=lexical",
     "Lexical verb. Indicative future tense third person plural", "", ""},
    {"VLFI3S", "category=verb|mood=indicative|number=singular|person=third|tense=future|verb-class=lexical",
     "Lexical verb. Indicative future tense third person singular", "", ""},
    {"VLFS1P", "category=verb|mood=subjunctive|number=plural|person=first|tense=future|verb-class=lexical",
     "Lexical verb. Subjunctive future tense first person plural", "", ""},
    {"VLFS1S", "category=verb|mood=subjunctive|number=singular|person=first|tense=future|verb-class=lexical",
     "Lexical verb. Subjunctive future tense first person singular", "", ""},
    {"VLFS2P", "category=verb|mood=subjunctive|number=plural|person=second|tense=future|verb-class=lexical",
     "Lexical verb. Subjunctive future tense second person plural", "", ""},
    {"VLFS2S", "category=verb|mood=subjunctive|number=singular|person=second|tense=future|verb-class=lexical",
     "Lexical verb. Subjunctive future tense second person singular", "", ""},
    {"VLFS3P", "category=verb|mood=subjunctive|number=plural|person=third|tense=future|verb-class=lexical",
     "Lexical verb. Subjunctive future tense third person plural", "", ""},
    {"VLFS3S", "category=verb|mood=subjunctive|number=singular|person=third|tense=future|verb-class=lexical",
     "Lexical verb. Subjunctive future tense third person singular", "", ""},
    {"VLGER", "category=verb|mood=gerund|verb-class=lexical",
     "Lexical verb. Gerund", "", ""},
    {"VLII1P", "category=verb|mood=indicative|number=plural|person=first|tense=imperfect|verb-class=lexical",
     "Lexical verb. Indicative imperfect tense first person plural", "", ""},
    {"VLII1S", "category=verb|mood=indicative|number=singular|person=first|tense=imperfect|verb-class=lexical",
     "Lexical verb. Indicative imperfect tense first person singular", "", ""},
    {"VLII2P", "category=verb|mood=indicative|number=plural|person=second|tense=imperfect|verb-class=lexical",
     "Lexical verb. Indicative imperfect tense second person plural", "", ""},
    {"VLII2S", "category=verb|mood=indicative|number=singular|person=second|tense=imperfect|verb-class=lexical",
     "Lexical verb. Indicative imperfect tense second person singular", "", ""},
    {"VLII3P", "category=verb|mood=indicative|number=plural|person=third|tense=imperfect|verb-class=lexical",
     "Lexical verb. Indicative imperfect tense third person plural", "", ""},
    {"VLII3S", "category=verb|mood=indicative|number=singular|person=third|tense=imperfect|verb-class=lexical",
     "Lexical verb. Indicative imperfect tense third person singular", "", ""},
    {"VLINF", "category=verb|mood=infinitive|verb-class=lexical",
     "Lexical verb. Infinitive", "", ""},
    {"VLIS1P", "category=verb|mood=subjunctive|number=plural|person=first|tense=imperfect|verb-class=lexical",
     "Lexical verb. Subjunctive imperfect tense first person plural", "", ""},
    {"VLIS1S", "category=verb|mood=subjunctive|number=singular|person=first|tense=imperfect|verb-class=lexical",
     "Lexical verb. Subjunctive imperfect tense first person singular", "", ""},
    {"VLIS2P", "category=verb|mood=subjunctive|number=plural|person=second|tense=imperfect|verb-class=lexical",
     "Lexical verb. Subjunctive imperfect tense second person plural", "", ""},
    {"VLIS2S", "category=verb|mood=subjunctive|number=singular|person=second|tense=imperfect|verb-class=lexical",
     "Lexical verb. Subjunctive imperfect tense second person singular", "", ""},
    {"VLIS3P", "category=verb|mood=subjunctive|number=plural|person=third|tense=imperfect|verb-class=lexical",
     "Lexical verb. Subjunctive imperfect tense third person plural", "", ""},
    {"VLIS3S", "category=verb|mood=subjunctive|number=singular|person=third|tense=imperfect|verb-class=lexical",
     "Lexical verb. Subjunctive imperfect tense third person singular", "", ""},
    {"VLPI1P", "category=verb|mood=indicative|number=plural|person=first|tense=present|verb-class=lexical",
     "Lexical verb. Indicative present tense first person plural", "", ""},
    {"VLPI1S", "category=verb|mood=indicative|number=singular|person=first|tense=present|verb-class=lexical",
     "Lexical verb. Indicative present tense first person singular", "", ""},
    {"VLPI2P", "category=verb|mood=indicative|number=plural|person=second|tense=present|verb-class=lexical",
     "Lexical verb. Indicative present tense second person plural", "", ""},
    {"VLPI2S", "category=verb|mood=indicative|number=singular|person=second|tense=present|verb-class=lexical",
     "Lexical verb. Indicative present tense second person singular", "", ""},
    {"VLPI3P", "category=verb|mood=indicative|number=plural|person=third|tense=present|verb-class=lexical",
     "Lexical verb. Indicative present tense third person plural", "", ""},
    {"VLPI3S", "category=verb|mood=indicative|number=singular|person=third|tense=present|verb-class=lexical",
     "Lexical verb. Indicative present tense third person singular", "", ""},
    {"VLPM2P", "category=verb|mood=imperative|number=plural|person=second|verb-class=lexical",
     "Lexical verb. Imperative second person plural", "", ""},
    {"VLPM2S", "category=verb|mood=imperative|number=singular|person=second|verb-class=lexical",
     "Lexical verb. Imperative second person singular", "", ""},
    {"VLPPFP", "category=verb|gender=feminine|mood=present-participle|number=plural|verb-class=lexical",
     "Lexical verb. Feminine plural present participle", "", ""},
    {"VLPPFS", "category=verb|gender=feminine|mood=present-participle|number=singular|verb-class=lexical",
     "Lexical verb. Feminine singular present participle", "", ""},
    {"VLPPMP", "category=verb|gender=masculine|mood=present-participle|number=plural|verb-class=lexical",
     "Lexical verb. Masculine plural present participle", "", ""},
    {"VLPPMS", "category=verb|gender=masculine|mood=present-participle|number=singular|verb-class=lexical",
     "Lexical verb. Masculine singular present participle", "", ""},
    {"VLPS1P", "category=verb|mood=subjunctive|number=plural|person=first|tense=present|verb-class=lexical",
     "Lexical verb. Subjunctive present tense first person plural", "", ""},
    {"VLPS1S", "category=verb|mood=subjunctive|number=singular|person=first|tense=present|verb-class=lexical",
     "Lexical verb. Subjunctive present tense first person singular", "", ""},
    {"VLPS2P", "category=verb|mood=subjunctive|number=plural|person=second|tense=present|verb-class=lexical",
     "Lexical verb. Subjunctive present tense second person plural", "", ""},
    {"VLPS2S", "category=verb|mood=subjunctive|number=singular|person=second|tense=present|verb-class=lexical",
     "Lexical verb. Subjunctive present tense second person singular", "", ""},
    {"VLPS3P", "category=verb|mood=subjunctive|number=plural|person=third|tense=present|verb-class=lexical",
     "Lexical verb. Subjunctive present tense third person plural", "", ""},
    {"VLPS3S", "category=verb|mood=subjunctive|number=singular|person=third|tense=present|verb-class=lexical",
     "Lexical verb. Subjunctive present tense third person singular", "", ""},
    {"VLPXFP", "category=verb|gender=feminine|mood=past-participle|number=plural|verb-class=lexical",
     "Lexical verb. Feminine plural past participle", "", ""},
    {"VLPXFS", "category=verb|gender=feminine|mood=past-participle|number=singular|verb-class=lexical",
     "Lexical verb. Feminine singular past participle", "", ""},
    {"VLPXMP", "category=verb|gender=masculine|mood=past-participle|number=plural|verb-class=lexical",
     "Lexical verb. Masculine plural past participle", "", ""},
    {"VLPXMS", "category=verb|gender=masculine|mood=past-participle|number=singular|verb-class=lexical",
     "Lexical verb. Masculine singular past participle", "", ""},
    {"VLXI1P", "category=verb|mood=indicative|number=plural|person=first|tense=preterite|verb-class=lexical",
     "Lexical verb. Indicative preterite tense first person plural", "", ""},
    {"VLXI1S", "category=verb|mood=indicative|number=singular|person=first|tense=preterite|verb-class=lexical",
     "Lexical verb. Indicative preterite tense first person singular", "", ""},
    {"VLXI2P", "category=verb|mood=indicative|number=plural|person=second|tense=preterite|verb-class=lexical",
     "Lexical verb. Indicative preterite tense second person plural", "", ""},
    {"VLXI2S", "category=verb|mood=indicative|number=singular|person=second|tense=preterite|verb-class=lexical",
     "Lexical verb. Indicative preterite tense second person singular", "", ""},
    {"VLXI3P", "category=verb|mood=indicative|number=plural|person=third|tense=preterite|verb-class=lexical",
     "Lexical verb. Indicative preterite tense third person plural", "", ""},
    {"VLXI3S", "category=verb|mood=indicative|number=singular|person=third|tense=preterite|verb-class=lexical",
     "Lexical verb. Indicative preterite tense third person singular", "", ""},
    {"VMCI1P", "category=verb|mood=indicative|number=plural|person=first|tense=conditional|verb-class=modal",
     "Modal verb. Indicative conditional tense first person plural", "", ""},
    {"VMCI1S", "category=verb|mood=indicative|number=singular|person=first|tense=conditional|verb-class=modal",
     "Modal verb. Indicative conditional tense first person singular", "", ""},
    {"VMCI2P", "category=verb|mood=indicative|number=plural|person=second|tense=conditional|verb-class=modal",
     "Modal verb. Indicative conditional tense second person plural", "", ""},
    {"VMCI2S", "category=verb|mood=indicative|number=singular|person=second|tense=conditional|verb-class=modal",
     "Modal verb. Indicative conditional tense second person singular", "", ""},
    {"VMCI3P", "category=verb|mood=indicative|number=plural|person=third|tense=conditional|verb-class=modal",
     "Modal verb. Indicative conditional tense third person plural", "", ""},
    {"VMCI3S", "category=verb|mood=indicative|number=singular|person=third|tense=conditional|verb-class=modal",
     "Modal verb. Indicative conditional tense third person singular", "", ""},
    {"VMFI1P", "category=verb|mood=indicative|number=plural|person=first|tense=future|verb-class=modal",
     "Modal verb. Indicative future tense first person plural", "", ""},
    {"VMFI1S", "category=verb|mood=indicative|number=singular|person=first|tense=future|verb-class=modal",
     "Modal verb. Indicative future tense first person singular", "", ""},
    {"VMFI2P", "category=verb|mood=indicative|number=plural|person=second|tense=future|verb-class=modal",
     "Modal verb. Indicative future tense second person plural", "", ""},
    {"VMFI2S", "category=verb|mood=indicative|number=singular|person=second|tense=future|verb-class=modal",
     "Modal verb. Indicative future tense second person singular", "", ""},
    {"VMFI3P", "category=verb|mood=indicative|number=plural|person=third|tense=future|verb-class=modal",
     "Modal verb. Indicative future tense third person plural", "", ""},
    {"VMFI3S", "category=verb|mood=indicative|number=singular|person=third|tense=future|verb-class=modal",
     "Modal verb. Indicative future tense third person singular", "", ""},
    {"VMFS1P", "category=verb|mood=subjunctive|number=plural|person=first|tense=future|verb-class=modal",
     "Modal verb. Subjunctive future tense first person plural", "", ""},
    {"VMFS1S", "category=verb|mood=subjunctive|number=singular|person=first|tense=future|verb-class=modal",
     "Modal verb. Subjunctive future tense first person singular", "", ""},
    {"VMFS2P", "category=verb|mood=subjunctive|number=plural|person=second|tense=future|verb-class=modal",
     "Modal verb. Subjunctive future tense second person plural", "", ""},
    {"VMFS2S", "category=verb|mood=subjunctive|number=singular|person=second|tense=future|verb-class=modal",
     "Modal verb. Subjunctive future tense second person singular", "", ""},
    {"VMFS3P", "category=verb|mood=subjunctive|number=plural|person=third|tense=future|verb-class=modal",
     "Modal verb. Subjunctive future tense third person plural", "", ""},
    {"VMFS3S", "category=verb|mood=subjunctive|number=singular|person=third|tense=future|verb-class=modal",
     "Modal verb. Subjunctive future tense third person singular", "", ""},
    {"VMGER", "category=verb|mood=gerund|verb-class=modal",
     "Modal verb. Gerund", "", ""},
    {"VMII1P", "category=verb|mood=indicative|number=plural|person=first|tense=imperfect|verb-class=modal",
     "Modal verb. Indicative imperfect tense first person plural", "", ""},
    {"VMII1S", "category=verb|mood=indicative|number=singular|person=first|tense=imperfect|verb-class=modal",
     "Modal verb. Indicative imperfect tense first person singular", "", ""},
    {"VMII2P", "category=verb|mood=indicative|number=plural|person=second|tense=imperfect|verb-class=modal",
     "Modal verb. Indicative imperfect tense second person plural", "", ""},
    {"VMII2S", "category=verb|mood=indicative|number=singular|person=second|tense=imperfect|verb-class=modal",
     "Modal verb. Indicative imperfect tense second person singular", "", ""},
    {"VMII3P", "category=verb|mood=indicative|number=plural|person=third|tense=imperfect|verb-class=modal",
     "Modal verb. Indicative imperfect tense third person plural", "", ""},
    {"VMII3S", "category=verb|mood=indicative|number=singular|person=third|tense=imperfect|verb-class=modal",
     "Modal verb. Indicative imperfect tense third person singular", "", ""},
    {"VMINF", "category=verb|mood=infinitive|verb-class=modal",
     "Modal verb. Infinitive", "", ""},
    {"VMIS1P", "category=verb|mood=subjunctive|number=plural|person=first|tense=imperfect|verb-class=modal",
     "Modal verb. Subjunctive imperfect tense first person plural", "", ""},
    {"VMIS1S", "category=verb|mood=subjunctive|number=singular|person=first|tense=imperfect|verb-class=modal",
     "Modal verb. Subjunctive imperfect tense first person singular", "", ""},
    {"VMIS2P", "category=verb|mood=subjunctive|number=plural|person=second|tense=imperfect|verb-class=modal",
     "Modal verb. Subjunctive imperfect tense second person plural", "", ""},
    {"VMIS2S", "category=verb|mood=subjunctive|number=singular|person=second|tense=imperfect|verb-class=modal",
     "Modal verb. Subjunctive imperfect tense second person singular", "", ""},
    {"VMIS3P", "category=verb|mood=subjunctive|number=plural|person=third|tense=imperfect|verb-class=modal",
     "Modal verb. Subjunctive imperfect tense third person plural", "", ""},
    {"VMIS3S", "category=verb|mood=subjunctive|number=singular|person=third|tense=imperfect|verb-class=modal",
     "Modal verb. Subjunctive imperfect tense third person singular", "", ""},
    {"VMPI1P", "category=verb|mood=indicative|number=plural|person=first|tense=present|verb-class=modal",
     "Modal verb. Indicative present tense first person plural", "", ""},
    {"VMPI1S", "category=verb|mood=indicative|number=singular|person=first|tense=present|verb-class=modal",
     "Modal verb. Indicative present tense first person singular", "", ""},
    {"VMPI2P", "category=verb|mood=indicative|number=plural|person=second|tense=present|verb-class=modal",
     "Modal verb. Indicative present tense second person plural", "", ""},
    {"VMPI2S", "category=verb|mood=indicative|number=singular|person=second|tense=present|verb-class=modal",
     "Modal verb. Indicative present tense second person singular", "", ""},
    {"VMPI3P", "category=verb|mood=indicative|number=plural|person=third|tense=present|verb-class=modal",
     "Modal verb. Indicative present tense third person plural", "", ""},
    {"VMPI3S", "category=verb|mood=indicative|number=singular|person=third|tense=present|verb-class=modal",
     "Modal verb. Indicative present tense third person singular", "", ""},
    {"VMPM2P", "category=verb|mood=imperative|number=plural|person=second|verb-class=modal",
     "Modal verb. Imperative second person plural", "", ""},
    {"VMPM2S", "category=verb|mood=imperative|number=singular|person=second|verb-class=modal",
     "Modal verb. Imperative second person singular", "", ""},
    {"VMPS1P", "category=verb|mood=subjunctive|number=plural|person=first|tense=present|verb-class=modal",
     "Modal verb. Subjunctive present tense first person plural", "", ""},
    {"VMPS1S", "category=verb|mood=subjunctive|number=singular|person=first|tense=present|verb-class=modal",
     "Modal verb. Subjunctive present tense first person singular", "", ""},
    {"VMPS2P", "category=verb|mood=subjunctive|number=plural|person=second|tense=present|verb-class=modal",
     "Modal verb. Subjunctive present tense second person plural", "", ""},
    {"VMPS2S", "category=verb|mood=subjunctive|number=singular|person=second|tense=present|verb-class=modal",
     "Modal verb. Subjunctive present tense second person singular", "", ""},
    {"VMPS3P", "category=verb|mood=subjunctive|number=plural|person=third|tense=present|verb-class=modal",
     "Modal verb. Subjunctive present tense third person plural", "", ""},
    {"VMPS3S", "category=verb|mood=subjunctive|number=singular|person=third|tense=present|verb-class=modal",
     "Modal verb. Subjunctive present tense third person singular", "", ""},
    {"VMPX", "category=verb|mood=past-participle|verb-class=modal",
     "Modal verb. Past participle", "", ""},
    {"VMXI1P", "category=verb|mood=indicative|number=plural|person=first|tense=preterite|verb-class=modal",
     "Modal verb. Indicative preterite tense first person plural", "", ""},
    {"VMXI1S", "category=verb|mood=indicative|number=singular|person=first|tense=preterite|verb-class=modal",
     "Modal verb. Indicative preterite tense first person singular", "", ""},
    {"VMXI2P", "category=verb|mood=indicative|number=plural|person=second|tense=preterite|verb-class=modal",
     "Modal verb. Indicative preterite tense second person plural", "", ""},
    {"VMXI2S", "category=verb|mood=indicative|number=singular|person=second|tense=preterite|verb-class=modal",
     "Modal verb. Indicative preterite tense second person singular", "", ""},
    {"VMXI3P", "category=verb|mood=indicative|number=plural|person=third|tense=preterite|verb-class=modal",
     "Modal verb. Indicative preterite tense third person plural", "", ""},
    {"VMXI3S", "category=verb|mood=indicative|number=singular|person=third|tense=preterite|verb-class=modal",
     "Modal verb. Indicative preterite tense third person singular", "", ""},
    {"VSCI1P", "category=verb|mood=indicative|number=plural|person=first|tense=conditional|verb-class=ser",
     "Verb ser. Indicative conditional tense first person plural", "", ""},
    {"VSCI1S", "category=verb|mood=indicative|number=singular|person=first|tense=conditional|verb-class=ser",
     "Verb ser. Indicative conditional tense first person singular", "", ""},
    {"VSCI2P", "category=verb|mood=indicative|number=plural|person=second|tense=conditional|verb-class=ser",
     "Verb ser. Indicative conditional tense second person plural", "", ""},
    {"VSCI2S", "category=verb|mood=indicative|number=singular|person=second|tense=conditional|verb-class=ser",
     "Verb ser. Indicative conditional tense second person singular", "", ""},
    {"VSCI3P", "category=verb|mood=indicative|number=plural|person=third|tense=conditional|verb-class=ser",
     "Verb ser. Indicative conditional tense third person plural", "", ""},
    {"VSCI3S", "category=verb|mood=indicative|number=singular|person=third|tense=conditional|verb-class=ser",
     "Verb ser. Indicative conditional tense third person singular", "", ""},
    {"VSFI1P", "category=verb|mood=indicative|number=plural|person=first|tense=future|verb-class=ser",
     "Verb ser. Indicative future tense first person plural", "", ""},
    {"VSFI1S", "category=verb|mood=indicative|number=singular|person=first|tense=future|verb-class=ser",
     "Verb ser. Indicative future tense first person singular", "", ""},
    {"VSFI2P", "category=verb|mood=indicative|number=plural|person=second|tense=future|verb-class=ser",
     "Verb ser. Indicative future tense second person plural", "", ""},
    {"VSFI2S", "category=verb|mood=indicative|number=singular|person=second|tense=future|verb-class=ser",
     "Verb ser. Indicative future tense second person singular", "", ""},
    {"VSFI3P", "category=verb|mood=indicative|number=plural|person=third|tense=future|verb-class=ser",
     "Verb ser. Indicative future tense third person plural", "", ""},
    {"VSFI3S", "category=verb|mood=indicative|number=singular|person=third|tense=future|verb-class=ser",
     "Verb ser. Indicative future tense third person singular", "", ""},
    {"VSFS1P", "category=verb|mood=subjunctive|number=plural|person=first|tense=future|verb-class=ser",
     "Verb ser. Subjunctive future tense first person plural", "", ""},
    {"VSFS1S", "category=verb|mood=subjunctive|number=singular|person=first|tense=future|verb-class=ser",
     "Verb ser. Subjunctive future tense first person singular", "", ""},
    {"VSFS2P", "category=verb|mood=subjunctive|number=plural|person=second|tense=future|verb-class=ser",
     "Verb ser. Subjunctive future tense second person plural", "", ""},
    {"VSFS2S", "category=verb|mood=subjunctive|number=singular|person=second|tense=future|verb-class=ser",
     "Verb ser. Subjunctive future tense second person singular", "", ""},
    {"VSFS3P", "category=verb|mood=subjunctive|number=plural|person=third|tense=future|verb-class=ser",
     "Verb ser. Subjunctive future tense third person plural", "", ""},
    {"VSFS3S", "category=verb|mood=subjunctive|number=singular|person=third|tense=future|verb-class=ser",
     "Verb ser. Subjunctive future tense third person singular", "", ""},
    {"VSGER", "category=verb|mood=gerund|verb-class=ser",
     "Verb ser. Gerund", "", ""},
    {"VSII1P", "category=verb|mood=indicative|number=plural|person=first|tense=imperfect|verb-class=ser",
     "Verb ser. Indicative imperfect tense first person plural", "", ""},
    {"VSII1S", "category=verb|mood=indicative|number=singular|person=first|tense=imperfect|verb-class=ser",
     "Verb ser. Indicative imperfect tense first person singular", "", ""},
    {"VSII2P", "category=verb|mood=indicative|number=plural|person=second|tense=imperfect|verb-class=ser",
     "Verb ser. Indicative imperfect tense second person plural", "", ""},
    {"VSII2S", "category=verb|mood=indicative|number=singular|person=second|tense=imperfect|verb-class=ser",
     "Verb ser. Indicative imperfect tense second person singular", "", ""},
    {"VSII3P", "category=verb|mood=indicative|number=plural|person=third|tense=imperfect|verb-class=ser",
     "Verb ser. Indicative imperfect tense third person plural", "", ""},
    {"VSII3S", "category=verb|mood=indicative|number=singular|person=third|tense=imperfect|verb-class=ser",
     "Verb ser. Indicative imperfect tense third person singular", "", ""},
    {"VSINF", "category=verb|mood=infinitive|verb-class=ser",
     "Verb ser. Infinitive", "", ""},
    {"VSIS1P", "category=verb|mood=subjunctive|number=plural|person=first|tense=imperfect|verb-class=ser",
     "Verb ser. Subjunctive imperfect tense first person plural", "", ""},
    {"VSIS1S", "category=verb|mood=subjunctive|number=singular|person=first|tense=imperfect|verb-class=ser",
     "Verb ser. Subjunctive imperfect tense first person singular", "", ""},
    {"VSIS2P", "category=verb|mood=subjunctive|number=plural|person=second|tense=imperfect|verb-class=ser",
     "Verb ser. Subjunctive imperfect tense second person plural", "", ""},
    {"VSIS2S", "category=verb|mood=subjunctive|number=singular|person=second|tense=imperfect|verb-class=ser",
     "Verb ser. Subjunctive imperfect tense second person singular", "", ""},
    {"VSIS3P", "category=verb|mood=subjunctive|number=plural|person=third|tense=imperfect|verb-class=ser",
     "Verb ser. Subjunctive imperfect tense third person plural", "", ""},
    {"VSIS3S", "category=verb|mood=subjunctive|number=singular|person=third|tense=imperfect|verb-class=ser",
     "Verb ser. Subjunctive imperfect tense third person singular", "", ""},
    {"VSPI1P", "category=verb|mood=indicative|number=plural|person=first|tense=present|verb-class=ser",
     "Verb ser. Indicative present tense first person plural", "", ""},
    {"VSPI1S", "category=verb|mood=indicative|number=singular|person=first|tense=present|verb-class=ser",
     "Verb ser. Indicative present tense first person singular", "", ""},
    {"VSPI2P", "category=verb|mood=indicative|number=plural|person=second|tense=present|verb-class=ser",
     "Verb ser. Indicative present tense second person plural", "", ""},
    {"VSPI2S", "category=verb|mood=indicative|number=singular|person=second|tense=present|verb-class=ser",
     "Verb ser. Indicative present tense second person singular", "", ""},
    {"VSPI3P", "category=verb|mood=indicative|number=plural|person=third|tense=present|verb-class=ser",
     "Verb ser. Indicative present tense third person plural", "", ""},
    {"VSPI3S", "category=verb|mood=indicative|number=singular|person=third|tense=present|verb-class=ser",
     "Verb ser. Indicative present tense third person singular", "", ""},
    {"VSPM2P", "category=verb|mood=imperative|number=plural|person=second|verb-class=ser",
     "Verb ser. Imperative second person plural", "", ""},
    {"VSPM2S", "category=verb|mood=imperative|number=singular|person=second|verb-class=ser",
     "Verb ser. Imperative second person singular", "", ""},
    {"VSPS1P", "category=verb|mood=subjunctive|number=plural|person=first|tense=present|verb-class=ser",
     "Verb ser. Subjunctive present tense first person plural", "", ""},
    {"VSPS1S", "category=verb|mood=subjunctive|number=singular|person=first|tense=present|verb-class=ser",
     "Verb ser. Subjunctive present tense first person singular", "", ""},
    {"VSPS2P", "category=verb|mood=subjunctive|number=plural|person=second|tense=present|verb-class=ser",
     "Verb ser. Subjunctive present tense second person plural", "", ""},
    {"VSPS2S", "category=verb|mood=subjunctive|number=singular|person=second|tense=present|verb-class=ser",
     "Verb ser. Subjunctive present tense second person singular", "", ""},
    {"VSPS3P", "category=verb|mood=subjunctive|number=plural|person=third|tense=present|verb-class=ser",
     "Verb ser. Subjunctive present tense third person plural", "", ""},
    {"VSPS3S", "category=verb|mood=subjunctive|number=singular|person=third|tense=present|verb-class=ser",
     "Verb ser. Subjunctive present tense third person singular", "", ""},
    {"VSPX", "category=verb|mood=past-participle|verb-class=ser",
     "Verb ser. Past participle", "", ""},
    {"VSXI1P", "category=verb|mood=indicative|number=plural|person=first|tense=preterite|verb-class=ser",
     "Verb ser. Indicative preterite tense first person plural", "", ""},
    {"VSXI1S", "category=verb|mood=indicative|number=singular|person=first|tense=preterite|verb-class=ser",
     "Verb ser. Indicative preterite tense first person singular", "", ""},
    {"VSXI2P", "category=verb|mood=indicative|number=plural|person=second|tense=preterite|verb-class=ser",
     "Verb ser. Indicative preterite tense second person plural", "", ""},
    {"VSXI2S", "category=verb|mood=indicative|number=singular|person=second|tense=preterite|verb-class=ser",
     "Verb ser. Indicative preterite tense second person singular", "", ""},
    {"VSXI3P", "category=verb|mood=indicative|number=plural|person=third|tense=preterite|verb-class=ser",
     "Verb ser. Indicative preterite tense third person plural", "", ""},
    {"VSXI3S", "category=verb|mood=indicative|number=singular|person=third|tense=preterite|verb-class=ser",
     "Verb ser. Indicative preterite tense third person singular", "", ""},
};

}  // namespace

std::span<const RawRegistryRow> embedded_registry_rows() { return kRows; }

}  // namespace spantag
