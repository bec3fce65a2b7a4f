#include <doctest.h>

#include <httplib.h>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <thread>
#include <vector>

#include "dla/llm.hpp"

using namespace dla;
using nlohmann::json;

namespace {

const std::vector<ChatMessage>& sample_conversation() {
  static const std::vector<ChatMessage> messages = {
      {Role::system, "You answer questions."},
      {Role::user, "What is 2+2?"},
  };
  return messages;
}

// Local stand-in for the chat endpoint; one handler per test case.
class FakeEndpoint {
 public:
  template <typename Handler>
  explicit FakeEndpoint(Handler handler) {
    server_.Post("/v1/chat/completions", handler);
    port_ = server_.bind_to_any_port("127.0.0.1");
    REQUIRE(port_ > 0);
    thread_ = std::thread([this] { server_.listen_after_bind(); });
    server_.wait_until_ready();
  }

  ~FakeEndpoint() {
    server_.stop();
    thread_.join();
  }

  std::string base_url() const {
    return "http://127.0.0.1:" + std::to_string(port_) + "/v1";
  }

 private:
  httplib::Server server_;
  std::thread thread_;
  int port_ = 0;
};

}  // namespace

TEST_CASE("token estimates are one token per four bytes, rounded up") {
  CHECK(estimate_tokens("") == 0);
  CHECK(estimate_tokens("a") == 1);
  CHECK(estimate_tokens("abcd") == 1);
  CHECK(estimate_tokens("abcde") == 2);
  CHECK(estimate_input_tokens(sample_conversation()) ==
        estimate_tokens("You answer questions.") + estimate_tokens("What is 2+2?"));
}

TEST_CASE("scripted model replays its list in order and then refuses") {
  ScriptedModel model({"first", "second"});
  CHECK(model.replies_total() == 2);

  ChatReply r1 = model.chat(sample_conversation());
  CHECK(r1.content == "first");
  CHECK(r1.usage.source == UsageSource::estimated);
  CHECK(r1.usage.input == estimate_input_tokens(sample_conversation()));
  CHECK(r1.usage.output == estimate_tokens("first"));

  CHECK(model.chat(sample_conversation()).content == "second");
  CHECK(model.replies_consumed() == 2);
  CHECK_THROWS_AS(model.chat(sample_conversation()),
                  ScriptedModel::ScriptError);
}

TEST_CASE("scripted model insists on a leading system message") {
  ScriptedModel model({"x"});
  CHECK_THROWS_AS(model.chat({{Role::user, "hi"}}), LlmError);
  CHECK_THROWS_AS(model.chat({}), LlmError);
}

TEST_CASE("script files select by key and fall back to default") {
  namespace fs = std::filesystem;
  fs::path file = fs::current_path() / "dla_test_script.json";
  {
    std::ofstream out(file);
    out << R"({"agent:t001": ["a", "b"], "default": ["d"]})";
  }
  ScriptedModel keyed = ScriptedModel::from_file(file, "agent:t001");
  CHECK(keyed.replies_total() == 2);
  ScriptedModel fallback = ScriptedModel::from_file(file, "missing-key");
  CHECK(fallback.chat(sample_conversation()).content == "d");

  CHECK_THROWS_AS(ScriptedModel::from_file("no_such_script.json", "k"),
                  ScriptedModel::ScriptError);
  {
    std::ofstream out(file);
    out << "not json";
  }
  CHECK_THROWS_AS(ScriptedModel::from_file(file, "k"),
                  ScriptedModel::ScriptError);
  {
    std::ofstream out(file);
    out << R"({"other": []})";
  }
  CHECK_THROWS_AS(ScriptedModel::from_file(file, "k"),
                  ScriptedModel::ScriptError);
  fs::remove(file);
}

TEST_CASE("client factory honors the endpoint field") {
  namespace fs = std::filesystem;
  fs::path file = fs::current_path() / "dla_factory_script.json";
  {
    std::ofstream out(file);
    out << R"({"default": ["hello"]})";
  }
  ModelConfig scripted;
  scripted.endpoint = "scripted";
  scripted.script_path = file;
  auto client = make_chat_client(scripted, "any");
  CHECK(dynamic_cast<ScriptedModel*>(client.get()) != nullptr);
  fs::remove(file);

  ModelConfig remote;
  remote.endpoint = "http://127.0.0.1:9/v1";
  auto http_client = make_chat_client(remote, "any");
  CHECK(dynamic_cast<OpenAiChatClient*>(http_client.get()) != nullptr);
}

TEST_CASE("http client sends the conversation and reads reported usage") {
  setenv("OPENAI_API_KEY", "test-key", 1);
  json seen_body;
  std::string seen_auth;
  FakeEndpoint endpoint([&](const httplib::Request& req, httplib::Response& res) {
    seen_body = json::parse(req.body);
    if (req.has_header("Authorization")) {
      seen_auth = req.get_header_value("Authorization");
    }
    json reply = {
        {"choices", json::array({{{"message", {{"content", "the answer"}}}}})},
        {"usage", {{"prompt_tokens", 12}, {"completion_tokens", 3}}},
    };
    res.set_content(reply.dump(), "application/json");
  });

  ModelConfig config;
  config.model_name = "o1";
  config.endpoint = endpoint.base_url();
  OpenAiChatClient client(endpoint.base_url(), config);
  ChatReply reply = client.chat(sample_conversation());

  CHECK(reply.content == "the answer");
  CHECK(reply.usage.input == 12);
  CHECK(reply.usage.output == 3);
  CHECK(reply.usage.source == UsageSource::api_reported);
  CHECK(client.last_attempt_count() == 1);
  CHECK(seen_auth == "Bearer test-key");
  CHECK(seen_body["model"] == "o1");
  REQUIRE(seen_body["messages"].size() == 2);
  CHECK(seen_body["messages"][0]["role"] == "system");
  CHECK(seen_body["messages"][1]["content"] == "What is 2+2?");
}

TEST_CASE("http client falls back to estimates when usage is missing") {
  FakeEndpoint endpoint([&](const httplib::Request&, httplib::Response& res) {
    json reply = {
        {"choices", json::array({{{"message", {{"content", "ok"}}}}})},
    };
    res.set_content(reply.dump(), "application/json");
  });
  ModelConfig config;
  OpenAiChatClient client(endpoint.base_url(), config);
  ChatReply reply = client.chat(sample_conversation());
  CHECK(reply.usage.source == UsageSource::estimated);
  CHECK(reply.usage.input == estimate_input_tokens(sample_conversation()));
  CHECK(reply.usage.output == estimate_tokens("ok"));
}

TEST_CASE("http errors and malformed bodies become LlmError without retries") {
  int calls = 0;
  FakeEndpoint endpoint([&](const httplib::Request&, httplib::Response& res) {
    ++calls;
    if (calls == 1) {
      res.status = 500;
      res.set_content("overloaded", "text/plain");
    } else if (calls == 2) {
      res.set_content("not json at all", "application/json");
    } else {
      res.set_content(R"({"choices": []})", "application/json");
    }
  });
  ModelConfig config;
  OpenAiChatClient client(endpoint.base_url(), config);
  CHECK_THROWS_WITH_AS(client.chat(sample_conversation()),
                       doctest::Contains("500"), LlmError);
  CHECK(client.last_attempt_count() == 1);
  CHECK_THROWS_WITH_AS(client.chat(sample_conversation()),
                       doctest::Contains("JSON"), LlmError);
  CHECK_THROWS_AS(client.chat(sample_conversation()), LlmError);
  CHECK(calls == 3);
}

TEST_CASE("transport failures retry with backoff before giving up") {
  // Nothing listens on port 9 (discard); connection attempts fail fast.
  ModelConfig config;
  OpenAiChatClient client("http://127.0.0.1:9/v1", config);
  CHECK_THROWS_WITH_AS(client.chat(sample_conversation()),
                       doctest::Contains("transport"), LlmError);
  CHECK(client.last_attempt_count() == 3);
}
