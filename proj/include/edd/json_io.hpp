#pragma once

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "edd/matrix.hpp"
#include "edd/parse.hpp"

namespace edd {

using json = nlohmann::json;

/// Matrix document: {"ring": "Z"|"Qz"|"Rpr", "rows", "cols", "entries": [row-major strings]}.
struct MatrixDoc {
  std::string ring;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::string> entries;
};

inline MatrixDoc doc_from_json(const json& j) {
  if (!j.is_object()) throw InputError("matrix document must be a JSON object");
  MatrixDoc d;
  try {
    d.ring = j.at("ring").get<std::string>();
    d.rows = j.at("rows").get<std::size_t>();
    d.cols = j.at("cols").get<std::size_t>();
    d.entries = j.at("entries").get<std::vector<std::string>>();
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed matrix document: ") + e.what());
  }
  ring_tag(d.ring);
  if (d.entries.size() != d.rows * d.cols)
    throw InputError("expected " + std::to_string(d.rows * d.cols) + " entries, found " +
                     std::to_string(d.entries.size()));
  return d;
}

inline json doc_to_json(const MatrixDoc& d) {
  return json{{"ring", d.ring}, {"rows", d.rows}, {"cols", d.cols}, {"entries", d.entries}};
}

/// Reads a document from a file, or standard input for "-".
inline json read_json(const std::string& path) {
  std::stringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    buf << in.rdbuf();
  }
  try {
    return json::parse(buf.str());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON in ") + path + ": " + e.what(), e.byte);
  }
}

/// Entries in the fraction field; parse errors name the offending entry.
template <EuclideanRing R>
MatF<R> matrix_from_doc(const MatrixDoc& d) {
  if (ring_tag(d.ring) != ring_traits<R>::tag) throw InputError("ring mismatch: " + d.ring);
  MatF<R> out(d.rows, d.cols);
  for (std::size_t k = 0; k < d.entries.size(); ++k) {
    try {
      out(k / std::max<std::size_t>(d.cols, 1), k % std::max<std::size_t>(d.cols, 1)) = parse_value<R>(d.entries[k]);
    } catch (const ParseError& e) {
      throw ParseError("entry " + std::to_string(k) + " \"" + d.entries[k] + "\": " + e.message(), e.offset());
    } catch (const RingError& e) {
      throw InputError("entry " + std::to_string(k) + " \"" + d.entries[k] + "\": " + e.what());
    }
  }
  return out;
}

template <class T>
MatrixDoc doc_from_matrix(const Matrix<T>& m) {
  MatrixDoc d{ring_name(ring_traits<base_ring_t<T>>::tag), m.rows(), m.cols(), {}};
  for (const T& x : m.entries()) d.entries.push_back(format_value(x));
  return d;
}

template <class T>
json matrix_json(const Matrix<T>& m) {
  return doc_to_json(doc_from_matrix(m));
}

template <class T>
json elements_json(const std::vector<T>& v) {
  json out = json::array();
  for (const T& x : v) out.push_back(format_value(x));
  return out;
}

}  // namespace edd
