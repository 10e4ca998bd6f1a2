#pragma once

// Streaming reader for the DBLP XML dump vocabulary. Only `article` and
// `inproceedings` elements are publications; everything else is skipped.

#include <array>
#include <cstring>
#include <istream>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <expat.h>

#include "scholarank/detail/xml_entities.hpp"
#include "scholarank/error.hpp"
#include "scholarank/text.hpp"

namespace scholarank {

enum class PublicationType { article, inproceedings };

struct RawRecord {
  std::string source_key;
  PublicationType type = PublicationType::article;
  std::string title;
  std::vector<std::string> authors;  // byline order
  std::string venue;                 // `journal` or `booktitle`
  int year = 0;
  std::optional<std::string> doi;    // normalized

  bool operator==(const RawRecord&) const = default;
};

struct ParseDiagnostic {
  std::string source_key;
  std::string element;
  std::size_t line = 0;
  std::string message;
};

struct DblpParseResult {
  std::vector<RawRecord> records;
  std::vector<ParseDiagnostic> diagnostics;
  std::size_t publication_elements = 0;
};

namespace detail {

inline bool is_doi_link(std::string_view url) {
  for (std::string_view prefix : {"https://doi.org/", "http://doi.org/", "https://dx.doi.org/", "http://dx.doi.org/"})
    if (url.starts_with(prefix)) return url.size() > prefix.size();
  return false;
}

inline std::optional<int> parse_year(std::string_view text) {
  const std::string y = normalize_name(text);
  if (y.size() != 4) return std::nullopt;
  int value = 0;
  for (char c : y) {
    if (c < '0' || c > '9') return std::nullopt;
    value = value * 10 + (c - '0');
  }
  return value;
}

class DblpHandler {
 public:
  explicit DblpHandler(XML_Parser parser) : parser_(parser) {}

  DblpParseResult result;

  void start(const XML_Char* name, const XML_Char** attrs) {
    ++depth_;
    const std::string_view tag(name);
    if (pub_depth_ == 0) {
      if (tag == "article" || tag == "inproceedings") {
        pub_depth_ = depth_;
        ++result.publication_elements;
        current_ = {};
        current_.type = tag == "article" ? PublicationType::article : PublicationType::inproceedings;
        element_ = std::string(tag);
        line_ = XML_GetCurrentLineNumber(parser_);
        for (auto a = attrs; a && *a; a += 2)
          if (std::strcmp(a[0], "key") == 0) current_.source_key = a[1];
        title_.reset();
        year_text_.reset();
        venue_.reset();
        ee_.clear();
      }
      return;
    }
    if (depth_ == pub_depth_ + 1) {
      field_ = std::string(tag);
      text_.clear();
    }
  }

  void end(const XML_Char*) {
    if (pub_depth_ != 0 && depth_ == pub_depth_ + 1) close_field();
    if (pub_depth_ != 0 && depth_ == pub_depth_) {
      finish_publication();
      pub_depth_ = 0;
    }
    --depth_;
  }

  void text(const XML_Char* s, int len) {
    if (pub_depth_ != 0 && depth_ > pub_depth_) text_.append(s, static_cast<std::size_t>(len));
  }

 private:
  void close_field() {
    const std::string value = normalize_name(text_);
    if (field_ == "author") {
      if (!value.empty()) current_.authors.push_back(value);
    } else if (field_ == "title") {
      title_ = value;
    } else if (field_ == "year") {
      year_text_ = value;
    } else if ((field_ == "journal" && current_.type == PublicationType::article) ||
               (field_ == "booktitle" && current_.type == PublicationType::inproceedings)) {
      venue_ = value;
    } else if (field_ == "ee") {
      ee_.push_back(value);
    }
    field_.clear();
  }

  void finish_publication() {
    std::vector<std::string> missing;
    if (current_.authors.empty()) missing.emplace_back("author");
    if (!title_ || title_->empty()) missing.emplace_back("title");
    if (!year_text_) missing.emplace_back("year");
    if (!venue_ || venue_->empty())
      missing.emplace_back(current_.type == PublicationType::article ? "journal" : "booktitle");
    if (!missing.empty()) {
      std::string msg = "missing";
      for (std::size_t i = 0; i < missing.size(); ++i) msg += (i ? ", " : " ") + missing[i];
      diagnose(msg);
      return;
    }
    const auto year = parse_year(*year_text_);
    if (!year) {
      diagnose("year '" + *year_text_ + "' is not a 4-digit integer");
      return;
    }
    current_.year = *year;
    current_.title = *title_;
    current_.venue = *venue_;
    for (const auto& url : ee_)
      if (is_doi_link(url)) {
        current_.doi = normalize_doi(url);
        break;
      }
    result.records.push_back(std::move(current_));
  }

  void diagnose(std::string message) {
    result.diagnostics.push_back({current_.source_key, element_, line_, std::move(message)});
  }

  XML_Parser parser_;
  int depth_ = 0;
  int pub_depth_ = 0;
  RawRecord current_;
  std::string element_;
  std::size_t line_ = 0;
  std::string field_;
  std::string text_;
  std::optional<std::string> title_, year_text_, venue_;
  std::vector<std::string> ee_;
};

// Any external DTD reference is answered with the bundled entity set.
inline int XMLCALL supply_entity_dtd(XML_Parser parser, const XML_Char* context, const XML_Char*, const XML_Char*,
                                     const XML_Char*) {
  XML_Parser ext = XML_ExternalEntityParserCreate(parser, context, nullptr);
  if (!ext) return XML_STATUS_ERROR;
  const auto status = XML_Parse(ext, kDblpEntityDtd, static_cast<int>(std::strlen(kDblpEntityDtd)), 1);
  XML_ParserFree(ext);
  return status == XML_STATUS_OK ? XML_STATUS_OK : XML_STATUS_ERROR;
}

struct ParserDeleter {
  void operator()(XML_ParserStruct* p) const { XML_ParserFree(p); }
};

}  // namespace detail

// Publications missing author/title/year/venue, or with a malformed year,
// become diagnostics. Throws ParseError on XML that is malformed or truncated.
inline DblpParseResult parse_dblp(std::istream& in) {
  std::unique_ptr<XML_ParserStruct, detail::ParserDeleter> owner(XML_ParserCreate("UTF-8"));
  if (!owner) throw Error("cannot allocate XML parser");
  XML_Parser parser = owner.get();
  detail::DblpHandler handler(parser);
  XML_SetUserData(parser, &handler);
  XML_SetParamEntityParsing(parser, XML_PARAM_ENTITY_PARSING_UNLESS_STANDALONE);
  XML_SetExternalEntityRefHandler(parser, detail::supply_entity_dtd);
  XML_SetElementHandler(
      parser,
      [](void* ud, const XML_Char* name, const XML_Char** attrs) { static_cast<detail::DblpHandler*>(ud)->start(name, attrs); },
      [](void* ud, const XML_Char* name) { static_cast<detail::DblpHandler*>(ud)->end(name); });
  XML_SetCharacterDataHandler(parser, [](void* ud, const XML_Char* s, int len) {
    static_cast<detail::DblpHandler*>(ud)->text(s, len);
  });

  std::array<char, 1 << 16> buf;
  for (;;) {
    in.read(buf.data(), buf.size());
    const auto got = in.gcount();
    const bool final = got < static_cast<std::streamsize>(buf.size());
    if (XML_Parse(parser, buf.data(), static_cast<int>(got), final) == XML_STATUS_ERROR)
      throw ParseError(std::string("XML: ") + XML_ErrorString(XML_GetErrorCode(parser)),
                       XML_GetCurrentLineNumber(parser));
    if (final) break;
  }
  return std::move(handler.result);
}

}  // namespace scholarank
