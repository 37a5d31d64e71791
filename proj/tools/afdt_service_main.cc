#include <httplib.h>

#include <CLI11.hpp>
#include <iostream>

#include "afdt/service.h"

int main(int argc, char** argv) {
  CLI::App app{"AFDT analysis service", "afdt-service"};
  std::string host = "127.0.0.1";
  int port = 8741;
  std::size_t max_body = 1 << 20;
  long ttl_seconds = 3600;
  std::string cors_origin;
  app.add_option("--host", host, "listen address");
  app.add_option("--port", port, "listen port");
  app.add_option("--max-body", max_body, "maximum request body in bytes");
  app.add_option("--ttl-seconds", ttl_seconds, "idle lifetime of uploaded models");
  app.add_option("--cors-origin", cors_origin, "value for Access-Control-Allow-Origin");
  CLI11_PARSE(app, argc, argv);

  afdt::service::Config config;
  config.max_body = max_body;
  config.ttl = std::chrono::seconds(ttl_seconds);
  config.cors_origin = cors_origin;
  afdt::service::Service service(config);

  httplib::Server server;
  service.bind(server);
  std::cerr << "afdt-service listening on " << host << ":" << port << "\n";
  if (!server.listen(host, port)) {
    std::cerr << "afdt-service: cannot listen on " << host << ":" << port << "\n";
    return 1;
  }
  return 0;
}
