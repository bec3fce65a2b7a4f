#include <chrono>
#include <cstdlib>
#include <thread>

#include <httplib.h>
#include <nlohmann/json.hpp>

#include "dla/llm.hpp"

namespace dla {

namespace {

using nlohmann::json;

constexpr int kMaxAttempts = 3;
constexpr auto kBackoffStep = std::chrono::milliseconds(100);

// Splits "http://host:1234/v1" into the httplib origin and the path prefix.
void split_url(const std::string& url, std::string& origin, std::string& prefix) {
  std::size_t scheme = url.find("://");
  std::size_t path_start =
      scheme == std::string::npos ? url.find('/') : url.find('/', scheme + 3);
  if (path_start == std::string::npos) {
    origin = url;
    prefix = "";
  } else {
    origin = url.substr(0, path_start);
    prefix = url.substr(path_start);
  }
  while (!prefix.empty() && prefix.back() == '/') prefix.pop_back();
}

}  // namespace

OpenAiChatClient::OpenAiChatClient(std::string base_url, ModelConfig config)
    : base_url_(std::move(base_url)), config_(std::move(config)) {
  if (const char* key = std::getenv("OPENAI_API_KEY")) api_key_ = key;
}

OpenAiChatClient::~OpenAiChatClient() = default;

ChatReply OpenAiChatClient::chat(const std::vector<ChatMessage>& messages) {
  if (messages.empty() || messages.front().role != Role::system) {
    throw LlmError("conversation must start with a system message");
  }

  json body;
  body["model"] = config_.model_name;
  body["temperature"] = config_.temperature;
  json jmessages = json::array();
  for (const auto& m : messages) {
    jmessages.push_back({{"role", role_name(m.role)}, {"content", m.content}});
  }
  body["messages"] = std::move(jmessages);
  std::string payload = body.dump();

  std::string origin, prefix;
  split_url(base_url_, origin, prefix);
  std::string path = prefix + "/chat/completions";

  httplib::Headers headers;
  if (!api_key_.empty()) {
    headers.emplace("Authorization", "Bearer " + api_key_);
  }

  httplib::Result res;
  int attempt = 0;
  for (; attempt < kMaxAttempts; ++attempt) {
    if (attempt > 0) std::this_thread::sleep_for(kBackoffStep * attempt);
    httplib::Client client(origin);
    client.set_read_timeout(600, 0);
    client.set_connection_timeout(10, 0);
    res = client.Post(path, headers, payload, "application/json");
    if (res) break;  // transport succeeded; status handled below
  }
  last_attempts_ = res ? attempt + 1 : kMaxAttempts;
  if (!res) {
    throw LlmError("transport failure talking to " + base_url_ + ": " +
                   httplib::to_string(res.error()));
  }
  if (res->status < 200 || res->status >= 300) {
    throw LlmError("chat endpoint returned HTTP " + std::to_string(res->status) +
                   ": " + res->body);
  }

  json doc;
  try {
    doc = json::parse(res->body);
  } catch (const json::exception& e) {
    throw LlmError("chat endpoint returned invalid JSON: " + std::string(e.what()));
  }

  ChatReply reply;
  try {
    reply.content = doc.at("choices").at(0).at("message").at("content").get<std::string>();
  } catch (const json::exception&) {
    throw LlmError("chat response is missing choices[0].message.content");
  }

  if (doc.contains("usage") && doc["usage"].is_object() &&
      doc["usage"].contains("prompt_tokens") &&
      doc["usage"].contains("completion_tokens")) {
    reply.usage.input = doc["usage"]["prompt_tokens"].get<std::int64_t>();
    reply.usage.output = doc["usage"]["completion_tokens"].get<std::int64_t>();
    reply.usage.source = UsageSource::api_reported;
  } else {
    reply.usage.input = estimate_input_tokens(messages);
    reply.usage.output = estimate_tokens(reply.content);
    reply.usage.source = UsageSource::estimated;
  }
  return reply;
}

}  // namespace dla
