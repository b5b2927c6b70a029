#pragma once

// Vocabulary used by the lexicon files. The namespaces follow the Framester
// linked-data layout; the exact IRIs below are the contract between the
// loader and the shipped .nt snapshots.

namespace framerole::vocab {

inline constexpr const char* kRdfType = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";
inline constexpr const char* kRdfsLabel = "http://www.w3.org/2000/01/rdf-schema#label";
inline constexpr const char* kSkosCloseMatch = "http://www.w3.org/2004/02/skos/core#closeMatch";
inline constexpr const char* kXsdInt = "http://www.w3.org/2001/XMLSchema#int";

// fschema: frame/role schema (interface roles, role subsumption, frame
// hierarchy).
inline constexpr const char* kInterfaceRoleClass = "https://w3id.org/framester/schema/InterfaceRole";
inline constexpr const char* kSubsumedUnder = "https://w3id.org/framester/schema/subsumedUnder";
inline constexpr const char* kSubFrameOf = "https://w3id.org/framester/schema/subFrameOf";

// vn31schema: verb senses and their class-specific arguments.
inline constexpr const char* kVerbSenseClass = "https://w3id.org/framester/vn31/schema/VerbSense";
inline constexpr const char* kArgumentClass = "https://w3id.org/framester/vn31/schema/Argument";
inline constexpr const char* kInVerbSense = "https://w3id.org/framester/vn31/schema/inVerbSense";
inline constexpr const char* kInVerbClass = "https://w3id.org/framester/vn31/schema/inVerbClass";

// vnschema: preposition selections.
inline constexpr const char* kSensePrepSelectionClass = "https://w3id.org/framester/vn/schema/SensePrepSelection";
inline constexpr const char* kHasVerbSense = "https://w3id.org/framester/vn/schema/hasVerbSense";
inline constexpr const char* kHasPreposition = "https://w3id.org/framester/vn/schema/hasPreposition";
inline constexpr const char* kHasGenericArgument = "https://w3id.org/framester/vn/schema/hasGenericArgument";

// wn30schema: WordNet sense frequencies.
inline constexpr const char* kTagCount = "https://w3id.org/framester/wn/wn30/schema/tagCount";

}  // namespace framerole::vocab
