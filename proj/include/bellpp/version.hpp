#pragma once

#define BELLPP_VERSION "0.1.0"
