#pragma once

#include <string>
#include <string_view>

namespace litrev {

// Extraction backends are swappable behind this interface; the pipeline only
// needs linearized text in reading order.
class PdfTextExtractor {
public:
    virtual ~PdfTextExtractor() = default;

    // Throws ExtractionFailed on corrupt or encrypted input.
    virtual std::string extract(std::string_view pdf_bytes) = 0;
};

// Dependency-free backend: walks content streams (raw or FlateDecode),
// collecting the Tj / TJ / ' / " text-showing operators. Enough for
// digitally-born papers; scanned or exotic PDFs should go through a
// different backend.
class BuiltinPdfExtractor : public PdfTextExtractor {
public:
    std::string extract(std::string_view pdf_bytes) override;
};

std::string extract_text(std::string_view pdf_bytes);

} // namespace litrev
