#include "dla/llm.hpp"

#include <fstream>

#include <nlohmann/json.hpp>

namespace dla {

std::string role_name(Role role) {
  switch (role) {
    case Role::system:
      return "system";
    case Role::user:
      return "user";
    case Role::assistant:
      return "assistant";
  }
  return "user";
}

std::int64_t estimate_tokens(const std::string& text) {
  return static_cast<std::int64_t>((text.size() + 3) / 4);
}

std::int64_t estimate_input_tokens(const std::vector<ChatMessage>& messages) {
  std::int64_t total = 0;
  for (const auto& m : messages) total += estimate_tokens(m.content);
  return total;
}

ScriptedModel::ScriptedModel(std::vector<std::string> replies)
    : replies_(std::move(replies)) {}

ScriptedModel ScriptedModel::from_file(const std::filesystem::path& file,
                                       const std::string& key) {
  std::ifstream in(file);
  if (!in) throw ScriptError("cannot open script file " + file.string());
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw ScriptError("script file is not valid JSON: " + std::string(e.what()));
  }
  const nlohmann::json* entry = nullptr;
  if (doc.contains(key)) {
    entry = &doc[key];
  } else if (doc.contains("default")) {
    entry = &doc["default"];
  } else {
    throw ScriptError("script file has no entry '" + key + "' and no 'default'");
  }
  if (!entry->is_array()) {
    throw ScriptError("script entry '" + key + "' must be an array of replies");
  }
  std::vector<std::string> replies;
  for (const auto& r : *entry) replies.push_back(r.get<std::string>());
  return ScriptedModel(std::move(replies));
}

ChatReply ScriptedModel::chat(const std::vector<ChatMessage>& messages) {
  if (messages.empty() || messages.front().role != Role::system) {
    throw LlmError("conversation must start with a system message");
  }
  if (next_ >= replies_.size()) {
    throw ScriptError("scripted model exhausted after " +
                      std::to_string(replies_.size()) + " replies");
  }
  ChatReply reply;
  reply.content = replies_[next_++];
  reply.usage.input = estimate_input_tokens(messages);
  reply.usage.output = estimate_tokens(reply.content);
  reply.usage.source = UsageSource::estimated;
  return reply;
}

std::unique_ptr<ChatClient> make_chat_client(const ModelConfig& config,
                                             const std::string& script_key) {
  if (config.endpoint == "scripted") {
    return std::make_unique<ScriptedModel>(
        ScriptedModel::from_file(config.script_path, script_key));
  }
  return std::make_unique<OpenAiChatClient>(config.endpoint, config);
}

}  // namespace dla
