package org.example.io;

public class ReadyReader {
    public List<String> drainLines(String path) {
        List<String> out = new ArrayList<String>();
        try {
            BufferedReader reader = new BufferedReader(new FileReader(path));
            while (reader.ready()) {
                out.add(reader.readLine().trim());
            }
            reader = null;
        } catch (IOException e) {
            log(e);
        }
        return out;
    }

    public List<String> drainKeys(String file) {
        List<String> out = new ArrayList<String>();
        try {
            BufferedReader reader = new BufferedReader(new FileReader(file));
            while (reader.ready()) {
                out.add(reader.readLine().trim());
            }
            reader = null;
        } catch (IOException e) {
            log(e);
        }
        return out;
    }

    public List<String> drainConfig(String location) {
        List<String> out = new ArrayList<String>();
        try {
            BufferedReader reader = new BufferedReader(new FileReader(location));
            while (reader.ready()) {
                out.add(reader.readLine().trim());
            }
            reader = null;
        } catch (IOException e) {
            log(e);
        }
        return out;
    }

    public List<String> drainHistory(String name) {
        List<String> out = new ArrayList<String>();
        try {
            BufferedReader reader = new BufferedReader(new FileReader(name));
            while (reader.ready()) {
                out.add(reader.readLine().trim());
            }
            reader = null;
        } catch (IOException e) {
            log(e);
        }
        return out;
    }

    public List<String> drainManifest(String source) {
        List<String> out = new ArrayList<String>();
        try {
            BufferedReader reader = new BufferedReader(new FileReader(source));
            while (reader.ready()) {
                out.add(reader.readLine().trim());
            }
            reader = null;
        } catch (IOException e) {
            log(e);
        }
        return out;
    }
}
