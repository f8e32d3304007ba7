#ifndef GALFOLD_DOCUMENT_HPP
#define GALFOLD_DOCUMENT_HPP

#include <string>
#include <vector>

#include "galfold/gallery.hpp"
#include "galfold/root_system.hpp"

namespace galfold {

/// On-disk gallery document: a root system label and a list of galleries,
/// every coordinate an exact-rational string. Serialization is canonical
/// (sorted vertex order, reduced fractions, no whitespace variation), so
/// parse -> serialize is the identity on canonical documents.
struct GalleryDocument {
  std::string root_system;
  std::vector<CombinatorialGallery> galleries;
};

/// Errc::ParseError on malformed JSON, malformed rationals (e.g. "1/0"),
/// rank mismatches or a bad panel/alcove count.
GalleryDocument parse_document(const std::string& text);

std::string serialize_document(const GalleryDocument& doc);

/// Canonical single-gallery serialization (used for orbit ordering).
std::string serialize_gallery(const CombinatorialGallery& g);

}  // namespace galfold

#endif  // GALFOLD_DOCUMENT_HPP
