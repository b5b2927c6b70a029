#pragma once

// Cached fetching of lexicon fragments from an HTTP endpoint. Responses are
// N-Triples bodies; the cache is a directory of <sha256-hex>.nt files keyed
// by endpoint + query. Never used by the pipeline unless configured.

#include <string>
#include <vector>

#include "framerole/errors.hpp"
#include "framerole/rdf.hpp"

namespace framerole::remote {

enum class QueryTemplate { SensesForLemma, SensesForLemmaAndFrame, RolesForSense, FrequenciesForLemma, PrepSelectionsForSense };

// The query string sent (URL-encoded) as the `query` parameter.
std::string build_query(QueryTemplate t, const std::vector<std::string>& params);

// Cache hit: returns the stored bytes, no network. Miss: one GET, response
// validated as N-Triples, written to a temp file and atomically renamed.
// Throws NetworkError, ParseError (malformed body; nothing cached) or
// CacheWriteError.
std::string remote_fetch(const std::string& endpoint_url, const std::string& query,
                         const std::string& cache_dir);

std::string cache_key(const std::string& endpoint_url, const std::string& query);

// Fetches everything the engine needs about the given lemmas (senses, roles,
// frequencies, preposition selections) and returns the merged triples.
rdf::ParsedTriples fetch_lemma_bundle(const std::string& endpoint_url,
                                      const std::vector<std::string>& lemmas,
                                      const std::string& cache_dir);

std::string sha256_hex(const std::string& data);
std::string url_encode(const std::string& s);

}  // namespace framerole::remote
