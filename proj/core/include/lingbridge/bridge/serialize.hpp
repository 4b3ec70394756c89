#pragma once

#include <string>

#include "lingbridge/bridge/pipeline.hpp"

namespace lingbridge::bridge {

inline constexpr int kPipelineFormatVersion = 1;

/// {"format": "lingbridge.pipeline", "format_version": 1, ...}. Doubles
/// are written in shortest round-trip form, so a reloaded pipeline predicts
/// bit-identically.
std::string pipeline_to_json(const PipelineModel& model);
/// Throws InputError on malformed documents and on any other format or
/// version (the message names both versions).
PipelineModel pipeline_from_json(const std::string& text);

void save_pipeline(const PipelineModel& model, const std::string& path);
PipelineModel load_pipeline(const std::string& path);

std::string correspondence_to_json(const CorrespondenceModel& model);
CorrespondenceModel correspondence_from_json(const std::string& text);

}  // namespace lingbridge::bridge
