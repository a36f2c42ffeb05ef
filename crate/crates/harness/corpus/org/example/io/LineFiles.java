package org.example.io;

public class LineFiles {
    public List<String> readLines(String path) {
        List<String> lines = new ArrayList<String>();
        try {
            BufferedReader reader = new BufferedReader(new FileReader(path));
            String line = reader.readLine();
            while (line != null) {
                lines.add(line.trim());
                line = reader.readLine();
            }
            reader.close();
        } catch (FileNotFoundException e) {
            log(e);
        } catch (IOException e) {
            log(e);
        }
        return lines;
    }

    public List<String> loadKeys(String file) {
        List<String> keys = new ArrayList<String>();
        try {
            BufferedReader in = new BufferedReader(new FileReader(file));
            String next = in.readLine();
            while (next != null) {
                keys.add(next.trim());
                next = in.readLine();
            }
            in.close();
        } catch (FileNotFoundException e) {
            log(e);
        } catch (IOException e) {
            log(e);
        }
        return keys;
    }

    public List<String> readConfig(String location) {
        List<String> entries = new ArrayList<String>();
        try {
            BufferedReader reader = new BufferedReader(new FileReader(location));
            String line = reader.readLine();
            while (line != null) {
                entries.add(line.trim());
                line = reader.readLine();
            }
            reader.close();
        } catch (FileNotFoundException e) {
            log(e);
        } catch (IOException e) {
            log(e);
        }
        return entries;
    }

    public List<String> loadHistory(String name) {
        List<String> history = new ArrayList<String>();
        try {
            BufferedReader input = new BufferedReader(new FileReader(name));
            String entry = input.readLine();
            while (entry != null) {
                history.add(entry.trim());
                entry = input.readLine();
            }
            input.close();
        } catch (FileNotFoundException e) {
            log(e);
        } catch (IOException e) {
            log(e);
        }
        return history;
    }

    public List<String> readManifest(String source) {
        List<String> manifest = new ArrayList<String>();
        try {
            BufferedReader br = new BufferedReader(new FileReader(source));
            String text = br.readLine();
            while (text != null) {
                manifest.add(text.trim());
                text = br.readLine();
            }
            br.close();
        } catch (FileNotFoundException e) {
            log(e);
        } catch (IOException e) {
            log(e);
        }
        return manifest;
    }

    public List<String> readRaw(String path) {
        List<String> raw = new ArrayList<String>();
        try {
            BufferedReader reader = new BufferedReader(new FileReader(path));
            String line = reader.readLine();
            while (line != null) {
                raw.add(line);
                line = reader.readLine();
            }
            reader.close();
        } catch (IOException e) {
            log(e);
        }
        return raw;
    }
}
