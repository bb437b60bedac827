#pragma once

#include <stdexcept>
#include <string>

namespace litrev {

// Base class for every failure the pipeline can report. Precondition
// violations use std::invalid_argument instead.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class ConfigInvalid : public Error {
public:
    ConfigInvalid(std::string field, const std::string& detail)
        : Error("invalid config field '" + field + "': " + detail),
          field_(std::move(field)) {}
    const std::string& field() const { return field_; }

private:
    std::string field_;
};

// A pipeline stage aborted; cached outputs of earlier stages stay on disk.
class StageFailure : public Error {
public:
    StageFailure(std::string stage, const std::string& cause)
        : Error("stage '" + stage + "' failed: " + cause), stage_(std::move(stage)) {}
    const std::string& stage() const { return stage_; }

private:
    std::string stage_;
};

class EmptyCorpus : public Error {
public:
    explicit EmptyCorpus(const std::string& what) : Error(what) {}
};

class TransportError : public Error {
public:
    explicit TransportError(const std::string& what) : Error(what) {}
};

// Offline run hit a request with no cached or fixture response.
class OfflineMiss : public TransportError {
public:
    explicit OfflineMiss(const std::string& what) : TransportError(what) {}
};

class FeedMalformed : public Error {
public:
    explicit FeedMalformed(const std::string& what) : Error(what) {}
};

class LlmUnavailable : public Error {
public:
    explicit LlmUnavailable(const std::string& what) : Error(what) {}
};

class InsufficientKeywords : public Error {
public:
    explicit InsufficientKeywords(const std::string& what) : Error(what) {}
};

class ProviderUnavailable : public Error {
public:
    explicit ProviderUnavailable(const std::string& what) : Error(what) {}
};

class DimensionMismatch : public Error {
public:
    explicit DimensionMismatch(const std::string& what) : Error(what) {}
};

class PartialResponse : public Error {
public:
    explicit PartialResponse(const std::string& what) : Error(what) {}
};

class ZeroVector : public Error {
public:
    explicit ZeroVector(const std::string& what) : Error(what) {}
};

class EmptyScores : public Error {
public:
    explicit EmptyScores(const std::string& what) : Error(what) {}
};

class ExtractionFailed : public Error {
public:
    explicit ExtractionFailed(const std::string& what) : Error(what) {}
};

class SchemaViolation : public Error {
public:
    explicit SchemaViolation(const std::string& what) : Error(what) {}
};

class NoJsonFound : public Error {
public:
    explicit NoJsonFound(const std::string& what) : Error(what) {}
};

class DuplicateKey : public Error {
public:
    explicit DuplicateKey(const std::string& what) : Error(what) {}
};

} // namespace litrev
