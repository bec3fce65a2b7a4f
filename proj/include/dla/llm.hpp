#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace dla {

enum class Role { system, user, assistant };

struct ChatMessage {
  Role role;
  std::string content;
};

std::string role_name(Role role);

/// Where a usage figure came from. Estimated counts come from our own
/// byte-length heuristic; api_reported counts come back on the wire.
enum class UsageSource { estimated, api_reported };

struct TokenUsage {
  std::int64_t input = 0;
  std::int64_t output = 0;
  UsageSource source = UsageSource::estimated;
};

/// Byte-length heuristic: one token per four bytes, rounded up.
std::int64_t estimate_tokens(const std::string& text);

/// Sum of per-message content estimates; no framing overhead.
std::int64_t estimate_input_tokens(const std::vector<ChatMessage>& messages);

struct ModelConfig {
  std::string model_name = "o1";
  double temperature = 0.1;
  // "scripted" selects the scripted model (script_path required); anything
  // else is treated as an OpenAI-compatible base URL.
  std::string endpoint = "scripted";
  std::filesystem::path script_path;
};

struct ChatReply {
  std::string content;
  TokenUsage usage;
};

class LlmError : public std::runtime_error {
 public:
  explicit LlmError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A chat model. Implementations must be safe to call from multiple threads.
class ChatClient {
 public:
  virtual ~ChatClient() = default;

  /// Sends one conversation; the first message must be the system prompt.
  virtual ChatReply chat(const std::vector<ChatMessage>& messages) = 0;
};

/// Deterministic stand-in for a model: replays a fixed list of replies.
/// Used by tests and by benchmark runs with endpoint "scripted".
class ScriptedModel : public ChatClient {
 public:
  class ScriptError : public std::logic_error {
   public:
    explicit ScriptError(const std::string& msg) : std::logic_error(msg) {}
  };

  explicit ScriptedModel(std::vector<std::string> replies);

  /// Loads the reply list stored under `key` in a JSON script file
  /// ({key: [reply, ...]}). Falls back to the "default" entry.
  static ScriptedModel from_file(const std::filesystem::path& file,
                                 const std::string& key);

  ChatReply chat(const std::vector<ChatMessage>& messages) override;

  std::size_t replies_consumed() const { return next_; }
  std::size_t replies_total() const { return replies_.size(); }

 private:
  std::vector<std::string> replies_;
  std::size_t next_ = 0;
};

/// Talks to an OpenAI-compatible /chat/completions endpoint over HTTP.
/// Reads the API key from OPENAI_API_KEY. Transport failures retry with
/// backoff; HTTP error statuses do not.
class OpenAiChatClient : public ChatClient {
 public:
  OpenAiChatClient(std::string base_url, ModelConfig config);
  ~OpenAiChatClient() override;

  ChatReply chat(const std::vector<ChatMessage>& messages) override;

  int last_attempt_count() const { return last_attempts_; }

 private:
  std::string base_url_;
  ModelConfig config_;
  std::string api_key_;
  int last_attempts_ = 0;
};

/// Factory honoring ModelConfig::endpoint. `script_key` selects the reply
/// list when the scripted model is chosen.
std::unique_ptr<ChatClient> make_chat_client(const ModelConfig& config,
                                             const std::string& script_key);

}  // namespace dla
