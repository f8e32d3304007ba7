#include "galfold/document.hpp"

#include <json.hpp>

#include "galfold/error.hpp"

namespace galfold {

using json = nlohmann::json;

namespace {

json face_to_json(const Face& f) {
  json jf = json::array();
  for (const auto& v : f.vertices()) {
    json jv = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) jv.push_back(v(i).str());
    jf.push_back(std::move(jv));
  }
  return jf;
}

json gallery_to_json(const CombinatorialGallery& g) {
  json jg;
  jg["panels"] = json::array();
  jg["alcoves"] = json::array();
  for (const auto& p : g.panels) jg["panels"].push_back(face_to_json(p));
  for (const auto& c : g.alcoves) jg["alcoves"].push_back(face_to_json(c));
  return jg;
}

Face face_from_json(const json& jf, int rank) {
  if (!jf.is_array() || jf.empty())
    fail(Errc::ParseError, "face must be a non-empty array of vertices");
  std::vector<Point> verts;
  for (const auto& jv : jf) {
    if (!jv.is_array() || static_cast<int>(jv.size()) != rank)
      fail(Errc::ParseError, "vertex must list one coordinate per rank");
    Vector v(rank);
    for (int i = 0; i < rank; ++i) {
      if (!jv[i].is_string())
        fail(Errc::ParseError, "coordinates are exact-rational strings");
      auto r = Rat::parse(jv[i].get<std::string>());
      if (!r)
        fail(Errc::ParseError,
             "malformed rational '" + jv[i].get<std::string>() + "'");
      v(i) = *r;
    }
    verts.push_back(std::move(v));
  }
  return Face(std::move(verts));
}

}  // namespace

GalleryDocument parse_document(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) fail(Errc::ParseError, "malformed JSON");
  if (!j.is_object() || !j.contains("root_system") ||
      !j["root_system"].is_string() || !j.contains("galleries") ||
      !j["galleries"].is_array())
    fail(Errc::ParseError, "document needs root_system and galleries");

  GalleryDocument doc;
  doc.root_system = j["root_system"].get<std::string>();
  int rank;
  try {
    rank = RootSystem::build(doc.root_system).rank();
  } catch (const Error&) {
    fail(Errc::ParseError, "unknown root system '" + doc.root_system + "'");
  }

  for (const auto& jg : j["galleries"]) {
    if (!jg.is_object() || !jg.contains("panels") || !jg.contains("alcoves") ||
        !jg["panels"].is_array() || !jg["alcoves"].is_array())
      fail(Errc::ParseError, "gallery needs panels and alcoves arrays");
    CombinatorialGallery g;
    for (const auto& jf : jg["panels"]) g.panels.push_back(face_from_json(jf, rank));
    for (const auto& jf : jg["alcoves"]) g.alcoves.push_back(face_from_json(jf, rank));
    if (g.panels.size() != g.alcoves.size() + 1)
      fail(Errc::ParseError, "need |panels| = |alcoves| + 1");
    doc.galleries.push_back(std::move(g));
  }
  return doc;
}

std::string serialize_document(const GalleryDocument& doc) {
  json j;
  j["root_system"] = doc.root_system;
  j["galleries"] = json::array();
  for (const auto& g : doc.galleries) j["galleries"].push_back(gallery_to_json(g));
  return j.dump();
}

std::string serialize_gallery(const CombinatorialGallery& g) {
  return gallery_to_json(g).dump();
}

}  // namespace galfold
